//! Fixed-point prehomogeneous subspaces V^s inside the five spaces:
//! orbit saturation, conormality of sub-orbits, restriction of simple
//! objects, the four named indecomposables, and exhaustive verification
//! of the trace fixed-point formula.

use crate::exactnum::Cyclo;
use crate::phv::{
    nevs, orbit_data, orbits, simple_objects, trace_shifted, CharCombo, ClassId, FiniteGroup,
    MicroSheaf, MicroValue, OrbitId, PhvClass,
};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SubCaseId {
    P1i,
    P2i,
    P2ii,
    P3i,
    P3ii,
    P3iii,
    P4i,
    P4ii,
    P4iii,
    P4iv,
    P4v,
}

impl SubCaseId {
    pub fn name(&self) -> &'static str {
        match self {
            SubCaseId::P1i => "P1(i)",
            SubCaseId::P2i => "P2(i)",
            SubCaseId::P2ii => "P2(ii)",
            SubCaseId::P3i => "P3(i)",
            SubCaseId::P3ii => "P3(ii)",
            SubCaseId::P3iii => "P3(iii)",
            SubCaseId::P4i => "P4(i)",
            SubCaseId::P4ii => "P4(ii)",
            SubCaseId::P4iii => "P4(iii)",
            SubCaseId::P4iv => "P4(iv)",
            SubCaseId::P4v => "P4(v)",
        }
    }
}

/// A fixed-point subspace V^s of an ambient prehomogeneous vector space,
/// itself one of the five spaces.
#[derive(Clone, Debug)]
pub struct SubCase {
    pub id: SubCaseId,
    pub ambient: PhvClass,
    pub sub: PhvClass,
    pub s_description: &'static str,
    pub s_order: u32,
}

/// Per-sub-orbit data: where it saturates, whether its regular conormal
/// data lands in the ambient regular conormal stratum, and the classes of
/// s on both sides of the induced map of microlocal fundamental groups.
#[derive(Clone, Debug)]
pub struct SubOrbit {
    pub label: OrbitId,
    pub saturation: OrbitId,
    pub v_conormal: bool,
    /// class of s in the sub-orbit's microlocal fundamental group
    pub s_class_sub: ClassId,
    /// class of s in the ambient saturation's microlocal fundamental group
    pub s_class_ambient: ClassId,
}

/// The proper fixed-point subspaces of a class, as enumerated case by case.
pub fn sub_cases(ambient: &PhvClass) -> Vec<SubCase> {
    let p0 = PhvClass::P0(FiniteGroup::Trivial);
    match ambient {
        PhvClass::P0(_) => vec![],
        PhvClass::P1 => vec![SubCase {
            id: SubCaseId::P1i,
            ambient: *ambient,
            sub: p0,
            s_description: "t != 1 in GL1",
            s_order: 2,
        }],
        PhvClass::P2(_) => vec![
            SubCase {
                id: SubCaseId::P2i,
                ambient: *ambient,
                sub: p0,
                s_description: "central or regular s with no fixed vectors",
                s_order: 2,
            },
            SubCase {
                id: SubCaseId::P2ii,
                ambient: *ambient,
                sub: PhvClass::P1,
                s_description: "diag(a,b) in GL2 fixing the first coordinate line",
                s_order: 2,
            },
        ],
        PhvClass::P3(_) => vec![
            SubCase {
                id: SubCaseId::P3i,
                ambient: *ambient,
                sub: p0,
                s_description: "torus element with no fixed vectors",
                s_order: 2,
            },
            SubCase {
                id: SubCaseId::P3ii,
                ambient: *ambient,
                sub: PhvClass::P1,
                s_description: "torus element fixing the first coordinate line",
                s_order: 2,
            },
            SubCase {
                id: SubCaseId::P3iii,
                ambient: *ambient,
                sub: PhvClass::P1,
                s_description: "torus element fixing the second coordinate line",
                s_order: 2,
            },
        ],
        PhvClass::P4 => vec![
            SubCase {
                id: SubCaseId::P4i,
                ambient: *ambient,
                sub: p0,
                s_description: "semisimple s with no fixed vectors",
                s_order: 4,
            },
            SubCase {
                id: SubCaseId::P4ii,
                ambient: *ambient,
                sub: PhvClass::P1,
                s_description: "semisimple s fixing the first coordinate line",
                s_order: 6,
            },
            SubCase {
                id: SubCaseId::P4iii,
                ambient: *ambient,
                sub: PhvClass::P1,
                s_description: "semisimple s fixing the second coordinate line",
                s_order: 3,
            },
            SubCase {
                id: SubCaseId::P4iv,
                ambient: *ambient,
                sub: PhvClass::P3(2),
                s_description: "diag(-1,1) in GL2",
                s_order: 2,
            },
            SubCase {
                id: SubCaseId::P4v,
                ambient: *ambient,
                sub: PhvClass::P3(3),
                s_description: "diag(theta3^2,theta3) in GL2",
                s_order: 3,
            },
        ],
    }
}

pub fn sub_case(ambient: &PhvClass, id: SubCaseId) -> Option<SubCase> {
    sub_cases(ambient).into_iter().find(|c| c.id == id)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubPhvError {
    #[error("no restriction data for sub-case {0}")]
    UnsupportedSubCase(&'static str),
}

/// The sub-orbit map of a supported sub-case (the three with printed
/// restriction data).
pub fn sub_orbits(case: &SubCase) -> Result<Vec<SubOrbit>, SubPhvError> {
    let so = |label: usize, sat: usize, conormal: bool, sub: usize, amb: usize| SubOrbit {
        label: OrbitId(label),
        saturation: OrbitId(sat),
        v_conormal: conormal,
        s_class_sub: ClassId(sub),
        s_class_ambient: ClassId(amb),
    };
    match case.id {
        // closed orbit to closed, open to open; all groups trivial
        SubCaseId::P2ii => Ok(vec![so(0, 0, true, 0, 0), so(1, 1, true, 0, 0)]),
        // every sub-orbit is conormal; s has order 2, mapping to the
        // 2-element class of S3 at the ends and the generator of the
        // order-2 group in the middle
        SubCaseId::P4iv => Ok(vec![
            so(0, 0, true, 1, 1),
            so(1, 1, true, 1, 1),
            so(2, 2, true, 1, 1),
            so(3, 3, true, 1, 1),
        ]),
        // only the closed and open sub-orbits are conormal; the two middle
        // lines both saturate into the ambient cube cone; s has order 3,
        // mapping to the 3-cycle class of S3 and trivially into the
        // order-2 middle groups
        SubCaseId::P4v => Ok(vec![
            so(0, 0, true, 1, 2),
            so(1, 1, false, 1, 0),
            so(2, 1, false, 1, 0),
            so(3, 3, true, 1, 2),
        ]),
        other => Err(SubPhvError::UnsupportedSubCase(other.name())),
    }
}

/// An object appearing in a restriction: a simple object of the sub-class
/// or one of the named indecomposables.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SubObject {
    Sheaf(MicroSheaf),
    F2,
    F3,
    F4,
    F5,
}

impl SubObject {
    pub fn name(&self, sub: &PhvClass) -> String {
        match self {
            SubObject::Sheaf(m) => m.name(sub),
            SubObject::F2 => "F2".into(),
            SubObject::F3 => "F3".into(),
            SubObject::F4 => "F4".into(),
            SubObject::F5 => "F5".into(),
        }
    }
}

/// A finite formal sum of shifted objects on the sub-class.
pub type PerClass = Vec<(SubObject, i64)>;

/// Restriction of a simple ambient object to the fixed-point subspace,
/// for the three sub-cases with printed data.
pub fn restrict(case: &SubCase, p: &MicroSheaf) -> Result<PerClass, SubPhvError> {
    let sheaf = |o: usize, c: usize, k: i64| (SubObject::Sheaf(MicroSheaf::new(o, c)), k);
    match case.id {
        SubCaseId::P2ii => Ok(match p.orbit.0 {
            0 => vec![sheaf(0, 0, 0)],
            1 => vec![sheaf(1, 0, 1)],
            _ => unreachable!(),
        }),
        SubCaseId::P4iv => Ok(match (p.orbit.0, p.character.0) {
            (0, 0) => vec![sheaf(0, 0, 0)],
            (1, 0) => vec![sheaf(1, 0, 1)],
            (2, 0) => vec![(SubObject::F2, 2), sheaf(0, 0, 1)],
            (3, 0) => vec![sheaf(3, 0, 2)],
            (3, 2) => vec![(SubObject::F3, 2), sheaf(0, 0, 2), sheaf(3, 1, 2)],
            (3, 1) => vec![sheaf(3, 1, 2)],
            _ => unreachable!(),
        }),
        SubCaseId::P4v => Ok(match (p.orbit.0, p.character.0) {
            (0, 0) => vec![sheaf(0, 0, 0)],
            (1, 0) => vec![(SubObject::F4, 1)],
            (2, 0) => vec![(SubObject::F4, 2), sheaf(0, 0, 1)],
            (3, 0) => vec![sheaf(3, 0, 2)],
            (3, 2) => vec![sheaf(3, 1, 2), sheaf(3, 2, 2), sheaf(0, 0, 2)],
            (3, 1) => vec![(SubObject::F5, 2)],
            _ => unreachable!(),
        }),
        other => Err(SubPhvError::UnsupportedSubCase(other.name())),
    }
}

/// Vanishing cycles of the indecomposables, computed by exactness from
/// their defining short exact sequences:
///   0 -> IC(1_{C0}) -> F2 -> IC(1_{C1}) + IC(1_{C2}) -> 0   on the n=2 toric space
///   0 -> IC(1_{C1}) -> F3 -> IC(1_{C3}) -> 0                on the n=2 toric space
///   F4 as F2 but on the n=3 toric space
///   0 -> F4 -> F5 -> IC(1_{C3}) -> 0                        on the n=3 toric space
pub fn nevs_indecomposable(f: SubObject) -> MicroValue {
    let sum = |class: &PhvClass, parts: &[MicroSheaf]| -> MicroValue {
        let mut acc = MicroValue {
            per_orbit: orbits(class)
                .iter()
                .map(|o| CharCombo::zero(o.a_abv))
                .collect(),
        };
        for p in parts {
            acc = acc.add(&nevs(class, p));
        }
        acc
    };
    match f {
        SubObject::F2 => sum(
            &PhvClass::P3(2),
            &[
                MicroSheaf::new(0, 0),
                MicroSheaf::new(1, 0),
                MicroSheaf::new(2, 0),
            ],
        ),
        SubObject::F3 => sum(
            &PhvClass::P3(2),
            &[MicroSheaf::new(1, 0), MicroSheaf::new(3, 0)],
        ),
        SubObject::F4 => sum(
            &PhvClass::P3(3),
            &[
                MicroSheaf::new(0, 0),
                MicroSheaf::new(1, 0),
                MicroSheaf::new(2, 0),
            ],
        ),
        SubObject::F5 => {
            let f4 = nevs_indecomposable(SubObject::F4);
            f4.add(&nevs(&PhvClass::P3(3), &MicroSheaf::new(3, 0)))
        }
        SubObject::Sheaf(_) => panic!("use phv::nevs for simple objects"),
    }
}

fn nevs_sub_object(sub: &PhvClass, obj: &SubObject) -> MicroValue {
    match obj {
        SubObject::Sheaf(m) => nevs(sub, m),
        other => nevs_indecomposable(*other),
    }
}

/// One entry of the fixed-point trace report.
#[derive(Clone, Debug)]
pub struct FpfRow {
    pub sheaf: MicroSheaf,
    pub sub_orbit: OrbitId,
    pub conormal: bool,
    pub left: Cyclo,
    pub right: Cyclo,
    pub equal: bool,
    /// both sides vanish identically (the zero-padded part of the grid)
    pub trivial: bool,
}

/// Run the fixed-point trace comparison over every simple ambient object
/// and every sub-orbit.  For conormal sub-orbits the two sides must agree;
/// the non-conormal rows of the order-3 case are reported too, and contain
/// genuine violations.
pub fn fpf_check(case: &SubCase) -> Result<Vec<FpfRow>, SubPhvError> {
    let subs = sub_orbits(case)?;
    let mut rows = Vec::new();
    for p in simple_objects(&case.ambient) {
        let ambient_value = nevs(&case.ambient, &p);
        let res = restrict(case, &p)?;
        for so in &subs {
            let amb_orbit = orbit_data(&case.ambient, so.saturation);
            let left = trace_shifted(
                ambient_value.at(so.saturation),
                amb_orbit.dim as i64,
                so.s_class_ambient,
            );
            let sub_dim = orbit_data(&case.sub, so.label).dim as i64;
            let mut right = Cyclo::zero();
            let mut right_zero = true;
            for (obj, shift) in &res {
                let value = nevs_sub_object(&case.sub, obj);
                let combo = value.at(so.label);
                if !combo.is_zero() {
                    right_zero = false;
                }
                right = right + trace_shifted(combo, shift + sub_dim, so.s_class_sub);
            }
            let trivial = ambient_value.at(so.saturation).is_zero() && right_zero;
            rows.push(FpfRow {
                sheaf: p,
                sub_orbit: so.label,
                conormal: so.v_conormal,
                equal: left == right,
                left,
                right,
                trivial,
            });
        }
    }
    Ok(rows)
}

/// Dimension of the s-fixed locus of an ambient orbit: the largest
/// dimension of a sub-orbit saturating to it, or 0 when only the closed
/// point is fixed.
pub fn fixed_dim(case: &SubCase, ambient_orbit: OrbitId) -> u32 {
    sub_orbits(case)
        .map(|subs| {
            subs.iter()
                .filter(|so| so.saturation == ambient_orbit)
                .map(|so| orbit_data(&case.sub, so.label).dim)
                .max()
                .unwrap_or(0)
        })
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phv::CharId;

    fn p4_case(id: SubCaseId) -> SubCase {
        sub_case(&PhvClass::P4, id).unwrap()
    }

    #[test]
    fn sub_case_enumeration() {
        assert!(sub_cases(&PhvClass::P0(FiniteGroup::Trivial)).is_empty());
        assert_eq!(sub_cases(&PhvClass::P1).len(), 1);
        let p4 = sub_cases(&PhvClass::P4);
        assert_eq!(p4.len(), 5);
        assert_eq!(p4[3].sub, PhvClass::P3(2));
        assert_eq!(p4[4].sub, PhvClass::P3(3));
    }

    #[test]
    fn saturation_preserves_open_closed() {
        for id in [SubCaseId::P2ii, SubCaseId::P4iv, SubCaseId::P4v] {
            let case = if id == SubCaseId::P2ii {
                sub_case(&PhvClass::P2(0), id).unwrap()
            } else {
                p4_case(id)
            };
            for so in sub_orbits(&case).unwrap() {
                if !so.v_conormal {
                    continue;
                }
                let sub = orbit_data(&case.sub, so.label);
                let amb = orbit_data(&case.ambient, so.saturation);
                assert_eq!(sub.is_closed, amb.is_closed);
                assert_eq!(sub.is_open, amb.is_open);
            }
        }
    }

    #[test]
    fn restriction_anchors() {
        // degree-4 case (iv): IC(1_{C2}) -> F2[2] + IC(1_{C'0})[1]
        let case = p4_case(SubCaseId::P4iv);
        let r = restrict(&case, &MicroSheaf::new(2, 0)).unwrap();
        assert_eq!(
            r,
            vec![
                (SubObject::F2, 2),
                (SubObject::Sheaf(MicroSheaf::new(0, 0)), 1)
            ]
        );
        // case (v): IC(eps_{C3}) -> F5[2]
        let case = p4_case(SubCaseId::P4v);
        let r = restrict(&case, &MicroSheaf::new(3, 1)).unwrap();
        assert_eq!(r, vec![(SubObject::F5, 2)]);
        // P2(ii): IC(1_{C1}) -> IC(1_{C'1})[1]
        let case = sub_case(&PhvClass::P2(0), SubCaseId::P2ii).unwrap();
        let r = restrict(&case, &MicroSheaf::new(1, 0)).unwrap();
        assert_eq!(r, vec![(SubObject::Sheaf(MicroSheaf::new(1, 0)), 1)]);
        // unsupported cases error
        let case = sub_case(&PhvClass::P2(0), SubCaseId::P2i).unwrap();
        assert!(restrict(&case, &MicroSheaf::new(0, 0)).is_err());
    }

    #[test]
    fn indecomposable_values() {
        // F2 = (1, 1, 1, 0), F3 = (0, 1, 0, 1), F4 = (1, 1, 1, 0), F5 = all 1
        let tv = |v: &MicroValue| -> Vec<u32> {
            v.per_orbit
                .iter()
                .map(|c| {
                    if c.is_zero() {
                        0
                    } else {
                        assert_eq!(c.as_single(), Some(CharId(0)));
                        1
                    }
                })
                .collect()
        };
        assert_eq!(tv(&nevs_indecomposable(SubObject::F2)), vec![1, 1, 1, 0]);
        assert_eq!(tv(&nevs_indecomposable(SubObject::F3)), vec![0, 1, 0, 1]);
        assert_eq!(tv(&nevs_indecomposable(SubObject::F4)), vec![1, 1, 1, 0]);
        assert_eq!(tv(&nevs_indecomposable(SubObject::F5)), vec![1, 1, 1, 1]);
    }

    #[test]
    fn fpf_holds_on_conormal_orbits() {
        for (class, id) in [
            (PhvClass::P2(0), SubCaseId::P2ii),
            (PhvClass::P2(1), SubCaseId::P2ii),
            (PhvClass::P4, SubCaseId::P4iv),
            (PhvClass::P4, SubCaseId::P4v),
        ] {
            let case = sub_case(&class, id).unwrap();
            for row in fpf_check(&case).unwrap() {
                if row.conormal {
                    assert!(
                        row.equal,
                        "{} at {} in {}: {} != {}",
                        row.sheaf.name(&case.ambient),
                        row.sub_orbit,
                        id.name(),
                        row.left,
                        row.right
                    );
                }
            }
        }
    }

    #[test]
    fn fpf_spot_values() {
        // case (iv), IC(1_{C2}) at C'1: both sides equal -1
        let case = p4_case(SubCaseId::P4iv);
        let rows = fpf_check(&case).unwrap();
        let row = rows
            .iter()
            .find(|r| r.sheaf == MicroSheaf::new(2, 0) && r.sub_orbit == OrbitId(1))
            .unwrap();
        assert_eq!(row.left, Cyclo::from_int(-1));
        assert_eq!(row.right, Cyclo::from_int(-1));

        // case (v), IC(varrho_{C3}) at C'3: both sides equal -1
        let case = p4_case(SubCaseId::P4v);
        let rows = fpf_check(&case).unwrap();
        let row = rows
            .iter()
            .find(|r| r.sheaf == MicroSheaf::new(3, 2) && r.sub_orbit == OrbitId(3))
            .unwrap();
        assert_eq!(row.left, Cyclo::from_int(-1));
        assert_eq!(row.right, Cyclo::from_int(-1));
    }

    #[test]
    fn fpf_violation_on_non_conormal_orbit() {
        let case = p4_case(SubCaseId::P4v);
        let rows = fpf_check(&case).unwrap();
        let violations: Vec<&FpfRow> = rows
            .iter()
            .filter(|r| !r.conormal && !r.equal)
            .collect();
        assert!(
            !violations.is_empty(),
            "the trace formula must fail somewhere off the conormal locus"
        );
    }

    #[test]
    fn fixed_dims() {
        let case = p4_case(SubCaseId::P4iv);
        assert_eq!(fixed_dim(&case, OrbitId(0)), 0);
        assert_eq!(fixed_dim(&case, OrbitId(1)), 1);
        assert_eq!(fixed_dim(&case, OrbitId(2)), 1);
        assert_eq!(fixed_dim(&case, OrbitId(3)), 2);
        let case = p4_case(SubCaseId::P4v);
        assert_eq!(fixed_dim(&case, OrbitId(0)), 0);
        assert_eq!(fixed_dim(&case, OrbitId(1)), 1);
        // nothing over the 3-dimensional orbit: only the closed point
        assert_eq!(fixed_dim(&case, OrbitId(2)), 0);
        assert_eq!(fixed_dim(&case, OrbitId(3)), 2);
    }
}
