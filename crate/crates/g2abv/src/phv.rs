//! The five prehomogeneous vector spaces as finite combinatorial objects:
//! orbits with their equivariant fundamental groups, simple perverse-sheaf
//! labels, the microlocal vanishing-cycles tables, and the Fourier
//! transform of simple objects.
//!
//! Tables are stored as literal data; re-derivable properties (diagonal
//! support, orbit dimensions, character orthogonality) are asserted
//! against them in tests as tripwires.

use crate::exactnum::{rat, Cyclo, RootOfUnity};
use std::fmt;

// ---------------------------------------------------------------------------
// Finite groups and character tables
// ---------------------------------------------------------------------------

/// The finite groups appearing as equivariant fundamental groups: 1,
/// cyclic of small order, and the symmetric group S3.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FiniteGroup {
    Trivial,
    Cyclic(u32),
    S3,
}

/// Index of a conjugacy class in a group's fixed class list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ClassId(pub usize);

/// Index of an irreducible character in a group's fixed character list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CharId(pub usize);

impl FiniteGroup {
    pub fn order(&self) -> u32 {
        match self {
            FiniteGroup::Trivial => 1,
            FiniteGroup::Cyclic(n) => *n,
            FiniteGroup::S3 => 6,
        }
    }

    pub fn class_count(&self) -> usize {
        match self {
            FiniteGroup::Trivial => 1,
            FiniteGroup::Cyclic(n) => *n as usize,
            FiniteGroup::S3 => 3,
        }
    }

    pub fn classes(&self) -> Vec<ClassId> {
        (0..self.class_count()).map(ClassId).collect()
    }

    pub fn chars(&self) -> Vec<CharId> {
        (0..self.class_count()).map(CharId).collect()
    }

    pub fn trivial_char(&self) -> CharId {
        CharId(0)
    }

    pub fn identity_class(&self) -> ClassId {
        ClassId(0)
    }

    /// Class sizes: cyclic groups are abelian; S3 has classes 1 / (12) / (123)
    /// of sizes 1, 3, 2.
    pub fn class_size(&self, c: ClassId) -> u32 {
        match self {
            FiniteGroup::Trivial | FiniteGroup::Cyclic(_) => 1,
            FiniteGroup::S3 => [1, 3, 2][c.0],
        }
    }

    pub fn centralizer_order(&self, c: ClassId) -> u32 {
        self.order() / self.class_size(c)
    }

    pub fn class_name(&self, c: ClassId) -> String {
        match self {
            FiniteGroup::Trivial => "1".into(),
            FiniteGroup::Cyclic(n) => match c.0 {
                0 => "1".into(),
                1 => format!("t{n}"),
                k => format!("t{n}^{k}"),
            },
            FiniteGroup::S3 => ["1", "(12)", "(123)"][c.0].into(),
        }
    }

    pub fn char_name(&self, x: CharId) -> String {
        match self {
            FiniteGroup::Trivial => "1".into(),
            FiniteGroup::Cyclic(n) => match x.0 {
                0 => "1".into(),
                1 => format!("vartheta{n}"),
                k => format!("vartheta{n}^{k}"),
            },
            FiniteGroup::S3 => ["1", "eps", "varrho"][x.0].into(),
        }
    }

    /// Character value chi(c), exactly in the 12th cyclotomic field.
    /// Cyclic orders not dividing 12 never arise in the stored tables.
    pub fn char_value(&self, chi: CharId, c: ClassId) -> Cyclo {
        match self {
            FiniteGroup::Trivial => Cyclo::one(),
            FiniteGroup::Cyclic(n) => RootOfUnity::new((chi.0 * c.0) as i64, *n as u64)
                .embed()
                .expect("table groups embed in Q(zeta_12)"),
            FiniteGroup::S3 => {
                // characters 1 = (1,1,1), eps = (1,-1,1), varrho = (2,0,-1)
                let table: [[i64; 3]; 3] = [[1, 1, 1], [1, -1, 1], [2, 0, -1]];
                Cyclo::from_int(table[chi.0][c.0])
            }
        }
    }

    pub fn char_degree(&self, chi: CharId) -> u32 {
        match self {
            FiniteGroup::S3 if chi.0 == 2 => 2,
            _ => 1,
        }
    }

    /// Product of two classes is well defined only for abelian groups.
    pub fn class_mul(&self, a: ClassId, b: ClassId) -> ClassId {
        match self {
            FiniteGroup::Trivial => ClassId(0),
            FiniteGroup::Cyclic(n) => ClassId((a.0 + b.0) % *n as usize),
            FiniteGroup::S3 => panic!("class multiplication needs an abelian group"),
        }
    }
}

/// A non-negative integral combination of irreducible characters of a fixed
/// group; the value of the vanishing-cycles functor on one orbit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharCombo {
    pub group: FiniteGroup,
    /// multiplicity per character index, length = class_count
    pub mults: Vec<u32>,
}

impl CharCombo {
    pub fn zero(group: FiniteGroup) -> Self {
        CharCombo {
            group,
            mults: vec![0; group.class_count()],
        }
    }

    pub fn single(group: FiniteGroup, chi: CharId) -> Self {
        let mut c = Self::zero(group);
        c.mults[chi.0] = 1;
        c
    }

    pub fn is_zero(&self) -> bool {
        self.mults.iter().all(|&m| m == 0)
    }

    pub fn add(&self, other: &CharCombo) -> CharCombo {
        assert_eq!(self.group, other.group);
        let mults = self
            .mults
            .iter()
            .zip(&other.mults)
            .map(|(a, b)| a + b)
            .collect();
        CharCombo {
            group: self.group,
            mults,
        }
    }

    /// Trace at a conjugacy class.
    pub fn trace(&self, c: ClassId) -> Cyclo {
        let mut acc = Cyclo::zero();
        for (i, &m) in self.mults.iter().enumerate() {
            if m > 0 {
                acc = acc + self.group.char_value(CharId(i), c).scale(&rat(m as i64, 1));
            }
        }
        acc
    }

    /// As a single irreducible character, when it is one.
    pub fn as_single(&self) -> Option<CharId> {
        let mut found = None;
        for (i, &m) in self.mults.iter().enumerate() {
            match (m, found) {
                (0, _) => {}
                (1, None) => found = Some(CharId(i)),
                _ => return None,
            }
        }
        found
    }
}

/// Trace of a shifted character combination: shifts contribute (-1)^shift.
pub fn trace_shifted(rep: &CharCombo, shift: i64, s: ClassId) -> Cyclo {
    let t = rep.trace(s);
    if shift.rem_euclid(2) == 0 {
        t
    } else {
        -t
    }
}

// ---------------------------------------------------------------------------
// The five prehomogeneous vector spaces
// ---------------------------------------------------------------------------

/// One of the five prehomogeneous vector spaces.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PhvClass {
    /// A point with a possibly disconnected group acting trivially.
    P0(FiniteGroup),
    /// GL1 on A^1 by scalar multiplication.
    P1,
    /// GL2 on A^2 by det^n-twisted matrix multiplication.
    P2(u32),
    /// GL1^2 on A^2, toric: (t1,t2).(x1,x2) = (t1 x1, t1 t2^n x2), n >= 1.
    P3(u32),
    /// GL2 on A^4 by the normalized symmetric cube.
    P4,
}

impl fmt::Display for PhvClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhvClass::P0(g) => write!(f, "P0({:?})", g),
            PhvClass::P1 => write!(f, "P1"),
            PhvClass::P2(n) => write!(f, "P2({n})"),
            PhvClass::P3(n) => write!(f, "P3({n})"),
            PhvClass::P4 => write!(f, "P4"),
        }
    }
}

/// Orbit labels, in closure order from the closed point.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct OrbitId(pub usize);

impl fmt::Display for OrbitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.0)
    }
}

#[derive(Clone, Debug)]
pub struct OrbitData {
    pub label: OrbitId,
    pub dim: u32,
    pub is_open: bool,
    pub is_closed: bool,
    /// equivariant fundamental group of the orbit
    pub a_c: FiniteGroup,
    /// equivariant fundamental group of the regular conormal stratum
    pub a_abv: FiniteGroup,
}

/// Orbits of a class, in closure order.
pub fn orbits(class: &PhvClass) -> Vec<OrbitData> {
    let orbit = |label, dim, is_open, is_closed, a_c, a_abv| OrbitData {
        label: OrbitId(label),
        dim,
        is_open,
        is_closed,
        a_c,
        a_abv,
    };
    match class {
        PhvClass::P0(g) => vec![orbit(0, 0, true, true, *g, *g)],
        PhvClass::P1 => vec![
            orbit(0, 0, false, true, FiniteGroup::Trivial, FiniteGroup::Trivial),
            orbit(1, 1, true, false, FiniteGroup::Trivial, FiniteGroup::Trivial),
        ],
        PhvClass::P2(_) => vec![
            orbit(0, 0, false, true, FiniteGroup::Trivial, FiniteGroup::Trivial),
            orbit(1, 2, true, false, FiniteGroup::Trivial, FiniteGroup::Trivial),
        ],
        PhvClass::P3(n) => {
            let mu = if *n == 1 {
                FiniteGroup::Trivial
            } else {
                FiniteGroup::Cyclic(*n)
            };
            vec![
                orbit(0, 0, false, true, FiniteGroup::Trivial, mu),
                orbit(1, 1, false, false, FiniteGroup::Trivial, mu),
                orbit(2, 1, false, false, FiniteGroup::Trivial, mu),
                orbit(3, 2, true, false, mu, mu),
            ]
        }
        PhvClass::P4 => {
            let z2 = FiniteGroup::Cyclic(2);
            vec![
                orbit(0, 0, false, true, FiniteGroup::Trivial, FiniteGroup::S3),
                orbit(1, 2, false, false, FiniteGroup::Trivial, z2),
                orbit(2, 3, false, false, FiniteGroup::Trivial, z2),
                orbit(3, 4, true, false, FiniteGroup::S3, FiniteGroup::S3),
            ]
        }
    }
}

pub fn orbit_data(class: &PhvClass, orbit: OrbitId) -> OrbitData {
    orbits(class)
        .into_iter()
        .find(|o| o.label == orbit)
        .expect("valid orbit label")
}

/// A simple equivariant perverse sheaf: an orbit together with an
/// irreducible character of its equivariant fundamental group.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MicroSheaf {
    pub orbit: OrbitId,
    pub character: CharId,
}

impl MicroSheaf {
    pub fn new(orbit: usize, character: usize) -> Self {
        MicroSheaf {
            orbit: OrbitId(orbit),
            character: CharId(character),
        }
    }

    pub fn name(&self, class: &PhvClass) -> String {
        let od = orbit_data(class, self.orbit);
        format!("IC({}_{})", od.a_c.char_name(self.character), self.orbit)
    }
}

/// The simple objects of a class: one per (orbit, character of A_C).
pub fn simple_objects(class: &PhvClass) -> Vec<MicroSheaf> {
    let mut out = Vec::new();
    for od in orbits(class) {
        for chi in od.a_c.chars() {
            out.push(MicroSheaf {
                orbit: od.label,
                character: chi,
            });
        }
    }
    out
}

/// The value of the vanishing-cycles functor on every orbit: per orbit, a
/// genuine character of that orbit's microlocal fundamental group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MicroValue {
    pub per_orbit: Vec<CharCombo>,
}

impl MicroValue {
    pub fn at(&self, orbit: OrbitId) -> &CharCombo {
        &self.per_orbit[orbit.0]
    }

    pub fn add(&self, other: &MicroValue) -> MicroValue {
        MicroValue {
            per_orbit: self
                .per_orbit
                .iter()
                .zip(&other.per_orbit)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }
}

/// The microlocal vanishing-cycles table of a class.
pub fn nevs(class: &PhvClass, p: &MicroSheaf) -> MicroValue {
    let os = orbits(class);
    let zero_row = |os: &[OrbitData]| -> Vec<CharCombo> {
        os.iter().map(|o| CharCombo::zero(o.a_abv)).collect()
    };
    let mut row = zero_row(&os);
    match class {
        PhvClass::P0(g) => {
            // the identity functor on representations of pi_0
            let _ = g;
            row[0] = CharCombo::single(os[0].a_abv, p.character);
        }
        PhvClass::P1 | PhvClass::P2(_) => {
            // diagonal: IC(1_{C_i}) sees only its own stratum
            row[p.orbit.0] = CharCombo::single(os[p.orbit.0].a_abv, CharId(0));
        }
        PhvClass::P3(_) => {
            if p.character.0 == 0 {
                row[p.orbit.0] = CharCombo::single(os[p.orbit.0].a_abv, CharId(0));
            } else {
                // IC(vartheta^k on the open orbit) contributes vartheta^k
                // on every stratum
                for (i, o) in os.iter().enumerate() {
                    row[i] = CharCombo::single(o.a_abv, p.character);
                }
            }
        }
        PhvClass::P4 => {
            // the printed table for the normalized symmetric cube; rows
            // indexed by (orbit, character): characters of S3 on C3 are
            // 0 = 1, 1 = eps, 2 = varrho
            let set = |row: &mut Vec<CharCombo>, entries: &[(usize, usize)]| {
                for &(orbit, chi) in entries {
                    row[orbit] = CharCombo::single(os[orbit].a_abv, CharId(chi));
                }
            };
            match (p.orbit.0, p.character.0) {
                (0, 0) => set(&mut row, &[(0, 0)]),
                (1, 0) => set(&mut row, &[(0, 2), (1, 0)]),
                (2, 0) => set(&mut row, &[(1, 1), (2, 0)]),
                (3, 0) => set(&mut row, &[(3, 0)]),
                (3, 2) => set(&mut row, &[(2, 1), (3, 2)]),
                (3, 1) => set(&mut row, &[(0, 1), (1, 0), (2, 1), (3, 1)]),
                _ => panic!("not a simple object of P4"),
            }
        }
    }
    MicroValue { per_orbit: row }
}

/// The Fourier transform on simple objects, with the involutive variant of
/// the degree-4 table.
///
/// The printed table for the symmetric-cube space maps
/// IC(1_{C0}) -> IC(1_{C3}) -> IC(1_{C1}) -> IC(varrho_{C3}) -> IC(1_{C0}),
/// a 4-cycle, which cannot be an involution.  `fourier` stores the variant
/// forced by involutivity and by compatibility with the duality pairing of
/// open and closed parameters; `fourier_printed` keeps the table verbatim.
/// The verify suite reports their difference rather than picking silently.
pub fn fourier(class: &PhvClass, p: &MicroSheaf) -> MicroSheaf {
    match class {
        PhvClass::P0(_) => *p,
        PhvClass::P1 | PhvClass::P2(_) => MicroSheaf::new(1 - p.orbit.0, 0),
        PhvClass::P3(_) => {
            if p.character.0 != 0 {
                *p
            } else {
                MicroSheaf::new(3 - p.orbit.0, 0)
            }
        }
        PhvClass::P4 => match (p.orbit.0, p.character.0) {
            (0, 0) => MicroSheaf::new(3, 0),
            (3, 0) => MicroSheaf::new(0, 0),
            (1, 0) => MicroSheaf::new(3, 2),
            (3, 2) => MicroSheaf::new(1, 0),
            (2, 0) => MicroSheaf::new(2, 0),
            (3, 1) => MicroSheaf::new(3, 1),
            _ => panic!("not a simple object of P4"),
        },
    }
}

/// The Fourier column exactly as printed (see `fourier`).
pub fn fourier_printed(class: &PhvClass, p: &MicroSheaf) -> MicroSheaf {
    match class {
        PhvClass::P4 => match (p.orbit.0, p.character.0) {
            (3, 0) => MicroSheaf::new(1, 0),
            (3, 2) => MicroSheaf::new(0, 0),
            _ => fourier(class, p),
        },
        _ => fourier(class, p),
    }
}

/// The simple objects on which the printed and involutive Fourier tables
/// disagree.
pub fn fourier_discrepancy(class: &PhvClass) -> Vec<(MicroSheaf, MicroSheaf, MicroSheaf)> {
    simple_objects(class)
        .into_iter()
        .filter_map(|p| {
            let a = fourier(class, &p);
            let b = fourier_printed(class, &p);
            if a != b {
                Some((p, a, b))
            } else {
                None
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_int;

    #[test]
    fn character_orthogonality() {
        for g in [
            FiniteGroup::Trivial,
            FiniteGroup::Cyclic(2),
            FiniteGroup::Cyclic(3),
            FiniteGroup::S3,
        ] {
            // rows: sum over classes of |class| chi(c) conj(psi(c)) = |G| delta
            for a in g.chars() {
                for b in g.chars() {
                    let mut acc = Cyclo::zero();
                    for c in g.classes() {
                        let term = g.char_value(a, c)
                            * g.char_value(b, c).conj().scale(&rat(g.class_size(c) as i64, 1));
                        acc = acc + term;
                    }
                    let expect = if a == b {
                        Cyclo::from_rational(rat_int(g.order() as i64))
                    } else {
                        Cyclo::zero()
                    };
                    assert_eq!(acc, expect, "{:?} {:?} {:?}", g, a, b);
                }
            }
            // columns
            for c in g.classes() {
                for d in g.classes() {
                    let mut acc = Cyclo::zero();
                    for chi in g.chars() {
                        acc = acc + g.char_value(chi, c) * g.char_value(chi, d).conj();
                    }
                    let expect = if c == d {
                        Cyclo::from_rational(rat_int(g.centralizer_order(c) as i64))
                    } else {
                        Cyclo::zero()
                    };
                    assert_eq!(acc, expect);
                }
            }
        }
    }

    #[test]
    fn s3_class_data() {
        let g = FiniteGroup::S3;
        assert_eq!(
            g.classes()
                .iter()
                .map(|&c| g.class_size(c))
                .collect::<Vec<_>>(),
            vec![1, 3, 2]
        );
        assert_eq!(
            g.classes()
                .iter()
                .map(|&c| g.centralizer_order(c))
                .collect::<Vec<_>>(),
            vec![6, 2, 3]
        );
    }

    #[test]
    fn orbit_shapes() {
        // exactly one open and one closed orbit per class
        for class in [
            PhvClass::P0(FiniteGroup::Trivial),
            PhvClass::P1,
            PhvClass::P2(0),
            PhvClass::P3(2),
            PhvClass::P4,
        ] {
            let os = orbits(&class);
            assert_eq!(os.iter().filter(|o| o.is_open).count(), 1);
            assert_eq!(os.iter().filter(|o| o.is_closed).count(), 1);
        }
        // dims and groups for the symmetric-cube space
        let os = orbits(&PhvClass::P4);
        assert_eq!(os.iter().map(|o| o.dim).collect::<Vec<_>>(), vec![0, 2, 3, 4]);
        assert_eq!(
            os.iter().map(|o| o.a_abv).collect::<Vec<_>>(),
            vec![
                FiniteGroup::S3,
                FiniteGroup::Cyclic(2),
                FiniteGroup::Cyclic(2),
                FiniteGroup::S3
            ]
        );
        // toric: A_C is cyclic only on the open orbit; the microlocal group
        // is cyclic on every orbit
        let os = orbits(&PhvClass::P3(3));
        assert!(os[..3].iter().all(|o| o.a_c == FiniteGroup::Trivial));
        assert_eq!(os[3].a_c, FiniteGroup::Cyclic(3));
        assert!(os.iter().all(|o| o.a_abv == FiniteGroup::Cyclic(3)));
        // P1: two orbits, everything trivial
        let os = orbits(&PhvClass::P1);
        assert_eq!(os.iter().map(|o| o.dim).collect::<Vec<_>>(), vec![0, 1]);
        // P0(G): a point carrying pi_0(G)
        let os = orbits(&PhvClass::P0(FiniteGroup::S3));
        assert_eq!(os.len(), 1);
        assert_eq!(os[0].a_c, FiniteGroup::S3);
    }

    #[test]
    fn simple_object_counts() {
        assert_eq!(simple_objects(&PhvClass::P1).len(), 2);
        assert_eq!(simple_objects(&PhvClass::P2(1)).len(), 2);
        // toric: 4 + (n-1)
        assert_eq!(simple_objects(&PhvClass::P3(1)).len(), 4);
        assert_eq!(simple_objects(&PhvClass::P3(2)).len(), 5);
        assert_eq!(simple_objects(&PhvClass::P3(3)).len(), 6);
        assert_eq!(simple_objects(&PhvClass::P4).len(), 6);
    }

    #[test]
    fn nevs_anchors() {
        // degree-4 table: IC(1_{C1}) -> (varrho, 1, 0, 0)
        let v = nevs(&PhvClass::P4, &MicroSheaf::new(1, 0));
        assert_eq!(v.at(OrbitId(0)).as_single(), Some(CharId(2)));
        assert_eq!(v.at(OrbitId(1)).as_single(), Some(CharId(0)));
        assert!(v.at(OrbitId(2)).is_zero());
        assert!(v.at(OrbitId(3)).is_zero());

        // toric: IC(vartheta_{C3}) is vartheta on every orbit
        for n in [2u32, 3] {
            let v = nevs(&PhvClass::P3(n), &MicroSheaf::new(3, 1));
            for o in 0..4 {
                assert_eq!(v.at(OrbitId(o)).as_single(), Some(CharId(1)));
            }
        }

        // P1: IC(1_{C0}) -> (1, 0)
        let v = nevs(&PhvClass::P1, &MicroSheaf::new(0, 0));
        assert_eq!(v.at(OrbitId(0)).as_single(), Some(CharId(0)));
        assert!(v.at(OrbitId(1)).is_zero());
    }

    #[test]
    fn nevs_diagonal_is_nonzero() {
        for class in [
            PhvClass::P0(FiniteGroup::Cyclic(2)),
            PhvClass::P1,
            PhvClass::P2(0),
            PhvClass::P3(1),
            PhvClass::P3(2),
            PhvClass::P3(3),
            PhvClass::P4,
        ] {
            for p in simple_objects(&class) {
                assert!(
                    !nevs(&class, &p).at(p.orbit).is_zero(),
                    "diagonal vanishes for {} on {class}",
                    p.name(&class)
                );
            }
        }
    }

    #[test]
    fn fourier_corrected_is_involutive_bijection() {
        for class in [
            PhvClass::P0(FiniteGroup::S3),
            PhvClass::P1,
            PhvClass::P2(1),
            PhvClass::P3(1),
            PhvClass::P3(2),
            PhvClass::P3(3),
            PhvClass::P4,
        ] {
            let simples = simple_objects(&class);
            let mut images: Vec<MicroSheaf> =
                simples.iter().map(|p| fourier(&class, p)).collect();
            for (p, img) in simples.iter().zip(&images) {
                assert_eq!(fourier(&class, img), *p, "not involutive on {class}");
            }
            images.sort_by_key(|m| (m.orbit, m.character));
            let mut all = simples.clone();
            all.sort_by_key(|m| (m.orbit, m.character));
            assert_eq!(images, all, "not a bijection on {class}");
        }
    }

    #[test]
    fn fourier_printed_differs_in_exactly_two_rows() {
        let diff = fourier_discrepancy(&PhvClass::P4);
        assert_eq!(diff.len(), 2);
        // the printed column is a bijection but not an involution
        let simples = simple_objects(&PhvClass::P4);
        let not_involutive = simples
            .iter()
            .any(|p| fourier_printed(&PhvClass::P4, &fourier_printed(&PhvClass::P4, p)) != *p);
        assert!(not_involutive);
        // every other class agrees
        for class in [PhvClass::P1, PhvClass::P2(0), PhvClass::P3(2), PhvClass::P3(3)] {
            assert!(fourier_discrepancy(&class).is_empty());
        }
    }

    #[test]
    fn fourier_anchors() {
        assert_eq!(
            fourier(&PhvClass::P1, &MicroSheaf::new(0, 0)),
            MicroSheaf::new(1, 0)
        );
        // toric: IC(vartheta_{C3}) is self-dual
        assert_eq!(
            fourier(&PhvClass::P3(2), &MicroSheaf::new(3, 1)),
            MicroSheaf::new(3, 1)
        );
        // degree-4: IC(eps_{C3}) is self-dual
        assert_eq!(
            fourier(&PhvClass::P4, &MicroSheaf::new(3, 1)),
            MicroSheaf::new(3, 1)
        );
    }

    #[test]
    fn trace_shifted_anchors() {
        // (vartheta_2, shift 3, s = t2) -> (-1)^3 * (-1) = 1
        let z2 = FiniteGroup::Cyclic(2);
        let c = CharCombo::single(z2, CharId(1));
        assert_eq!(trace_shifted(&c, 3, ClassId(1)), Cyclo::one());
        // (varrho, shift 0, 3-cycle) -> -1
        let s3 = FiniteGroup::S3;
        let c = CharCombo::single(s3, CharId(2));
        assert_eq!(trace_shifted(&c, 0, ClassId(2)), Cyclo::from_int(-1));
        // degree at the identity
        assert_eq!(trace_shifted(&c, 0, ClassId(0)), Cyclo::from_int(2));
        // negative shifts reduce mod 2
        assert_eq!(trace_shifted(&c, -2, ClassId(0)), Cyclo::from_int(2));
    }
}
