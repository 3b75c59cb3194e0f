//! Classification of unramified infinitesimal parameters: the nine cases,
//! the reductive group H acting on the moduli space, and the reduction to
//! one of the five prehomogeneous vector spaces.

use crate::exactnum::QValue;
use crate::phv::{FiniteGroup, PhvClass};
use crate::rootdata::{
    eval_root, weyl_act_torus, weyl_elements, Root, TorusElement, WeylElement, ALL_ROOTS, G1,
    G1_2G2, G1_3G2, G1_G2, G2R, TWO_G1_3G2,
};
use serde::Serialize;
use std::fmt;

/// An unramified infinitesimal parameter, determined by its value at
/// Frobenius in dual-torus coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InfinitesimalParameter {
    pub frobenius: TorusElement,
}

impl InfinitesimalParameter {
    pub fn new(frobenius: TorusElement) -> Self {
        InfinitesimalParameter { frobenius }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub enum CaseId {
    C0,
    C1Short,
    C2Long,
    C3,
    C4D2,
    C5,
    C6A2,
    C7Reg,
    C8Sub,
}

impl CaseId {
    pub const ALL: [CaseId; 9] = [
        CaseId::C0,
        CaseId::C1Short,
        CaseId::C2Long,
        CaseId::C3,
        CaseId::C4D2,
        CaseId::C5,
        CaseId::C6A2,
        CaseId::C7Reg,
        CaseId::C8Sub,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CaseId::C0 => "0",
            CaseId::C1Short => "1",
            CaseId::C2Long => "2",
            CaseId::C3 => "3",
            CaseId::C4D2 => "4",
            CaseId::C5 => "5",
            CaseId::C6A2 => "6",
            CaseId::C7Reg => "7",
            CaseId::C8Sub => "8",
        }
    }

    /// The standard subset of roots spanning the moduli space, in sorted
    /// order.
    pub fn standard_roots(&self) -> &'static [Root] {
        match self {
            CaseId::C0 => &[],
            CaseId::C1Short => &[G1_2G2],
            CaseId::C2Long => &[TWO_G1_3G2],
            CaseId::C3 => &[G1, TWO_G1_3G2],
            CaseId::C4D2 => &[G1, G1_2G2],
            CaseId::C5 => &[G2R, G1_G2],
            CaseId::C6A2 => &[G1, G1_3G2],
            CaseId::C7Reg => &[G2R, G1],
            CaseId::C8Sub => &[G1, G1_G2, G1_2G2, G1_3G2],
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}", self.name())
    }
}

/// The reductive group acting on the moduli space.  SO2xO2 is produced
/// only on the endoscopic SO4 side.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GroupDescriptor {
    DualTorus,
    GL2(Root),
    SL3,
    SO4Sub,
    G2Dual,
    SO2xO2,
}

impl GroupDescriptor {
    pub fn kind_name(&self) -> String {
        match self {
            GroupDescriptor::DualTorus => "T".into(),
            GroupDescriptor::GL2(r) => format!("GL2({r})"),
            GroupDescriptor::SL3 => "SL3".into(),
            GroupDescriptor::SO4Sub => "SO4".into(),
            GroupDescriptor::G2Dual => "G2".into(),
            GroupDescriptor::SO2xO2 => "S(O2xO2)".into(),
        }
    }
}

/// The result of classifying an infinitesimal parameter.
#[derive(Clone, Debug)]
pub struct InfCase {
    pub case_id: CaseId,
    /// Weyl element moving the input to the standard representative.
    pub normalizer: WeylElement,
    /// The standard root subset (sorted).
    pub r_lambda: Vec<Root>,
    pub h_group: GroupDescriptor,
    pub phv: PhvClass,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("no Weyl translate matches a standard subset (data bug): {0:?}")]
    NoStandardMatch(Vec<Root>),
}

/// The set of roots whose value at lambda(Fr) is exactly q, sorted.
pub fn r_lambda(lambda: &InfinitesimalParameter) -> Vec<Root> {
    let mut out: Vec<Root> = ALL_ROOTS
        .into_iter()
        .filter(|r| eval_root(*r, &lambda.frobenius).unwrap().is_q())
        .collect();
    out.sort();
    out
}

fn value_one_roots(t: &TorusElement) -> Vec<Root> {
    ALL_ROOTS
        .into_iter()
        .filter(|r| eval_root(*r, t).unwrap().is_one())
        .collect()
}

fn h_group_from(t: &TorusElement) -> GroupDescriptor {
    let ones = value_one_roots(t);
    match ones.len() {
        0 => GroupDescriptor::DualTorus,
        2 => {
            let pos = ones
                .iter()
                .copied()
                .find(|r| r.p > 0 || (r.p == 0 && r.r > 0))
                .expect("value-1 roots come in +/- pairs");
            GroupDescriptor::GL2(pos)
        }
        4 => GroupDescriptor::SO4Sub,
        6 => GroupDescriptor::SL3,
        12 => GroupDescriptor::G2Dual,
        n => unreachable!("value-1 roots form a closed subsystem; got {n} roots"),
    }
}

fn phv_for(case: CaseId, h: &GroupDescriptor) -> PhvClass {
    match case {
        CaseId::C0 => {
            // every group arising here is connected
            let _ = h;
            PhvClass::P0(FiniteGroup::Trivial)
        }
        CaseId::C1Short | CaseId::C2Long => PhvClass::P1,
        CaseId::C3 => PhvClass::P2(1),
        CaseId::C5 => PhvClass::P2(0),
        CaseId::C4D2 => PhvClass::P3(2),
        CaseId::C6A2 => PhvClass::P3(3),
        CaseId::C7Reg => PhvClass::P3(1),
        CaseId::C8Sub => PhvClass::P4,
    }
}

/// Classify an infinitesimal parameter into one of the nine cases.
///
/// All 12 Weyl translates are enumerated in the fixed total order on Weyl
/// elements; the first translate whose q-valued root set equals a standard
/// subset wins, making the output deterministic.
pub fn classify(lambda: &InfinitesimalParameter) -> Result<InfCase, ClassifyError> {
    for w in weyl_elements() {
        let t = weyl_act_torus(w, &lambda.frobenius);
        let rl = r_lambda(&InfinitesimalParameter::new(t.clone()));
        for case in CaseId::ALL {
            if rl.as_slice() == case.standard_roots() {
                let h_group = h_group_from(&t);
                return Ok(InfCase {
                    case_id: case,
                    normalizer: *w,
                    r_lambda: rl,
                    h_group,
                    phv: phv_for(case, &h_group),
                });
            }
        }
    }
    Err(ClassifyError::NoStandardMatch(r_lambda(lambda)))
}

/// Reducibility report for the principal series attached to a character
/// chi_1 (x) chi_2 of the torus, in q-polar form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducibilityReport {
    pub irreducible: bool,
    pub two_orbit: bool,
}

/// Build the infinitesimal parameter dual to chi_1 (x) chi_2 and read the
/// reducibility pattern off its geometry.  Inverting the dual-character
/// formula chi = mu_2 nu^{a2} (x) mu_1 mu_2^{-1} nu^{a1-a2} gives
/// lambda(Fr) = m(chi_1 chi_2, chi_1).
pub fn reducibility(chi1: &QValue, chi2: &QValue) -> Result<ReducibilityReport, ClassifyError> {
    let frob = TorusElement::new(chi1 * chi2, chi1.clone());
    let case = classify(&InfinitesimalParameter::new(frob))?;
    Ok(ReducibilityReport {
        irreducible: case.case_id == CaseId::C0,
        two_orbit: matches!(case.phv, PhvClass::P1 | PhvClass::P2(_)),
    })
}

/// Dimension of the moduli space by case, used as a tripwire.
pub fn expected_dim(case: CaseId) -> usize {
    case.standard_roots().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int, QValue, RootOfUnity};

    fn m(x: QValue, y: QValue) -> InfinitesimalParameter {
        InfinitesimalParameter::new(TorusElement::new(x, y))
    }

    fn minus_q() -> QValue {
        QValue::new(RootOfUnity::minus_one(), rat_int(1))
    }

    #[test]
    fn r_lambda_anchors() {
        // m(q^2, q) -> {g2, g1+g2}
        let lam = m(QValue::q_pow(2, 1), QValue::q());
        assert_eq!(r_lambda(&lam), vec![G2R, G1_G2]);
        // m(1, 1) -> empty
        assert!(r_lambda(&m(QValue::one(), QValue::one())).is_empty());
        // m(q, q) -> the four-root string
        let lam = m(QValue::q(), QValue::q());
        assert_eq!(r_lambda(&lam), vec![G1, G1_G2, G1_2G2, G1_3G2]);
    }

    #[test]
    fn classify_anchors() {
        // m(q, -q): case 4, H = T, P3(2)
        let c = classify(&m(QValue::q(), minus_q())).unwrap();
        assert_eq!(c.case_id, CaseId::C4D2);
        assert_eq!(c.h_group, GroupDescriptor::DualTorus);
        assert_eq!(c.phv, PhvClass::P3(2));

        // m(theta3 q, theta3^2 q): case 6, H = T, P3(3)
        let c = classify(&m(
            QValue::new(RootOfUnity::new(1, 3), rat_int(1)),
            QValue::new(RootOfUnity::new(2, 3), rat_int(1)),
        ))
        .unwrap();
        assert_eq!(c.case_id, CaseId::C6A2);
        assert_eq!(c.h_group, GroupDescriptor::DualTorus);
        assert_eq!(c.phv, PhvClass::P3(3));

        // m(q^3, q^2): case 7, H = T, P3(1)
        let c = classify(&m(QValue::q_pow(3, 1), QValue::q_pow(2, 1))).unwrap();
        assert_eq!(c.case_id, CaseId::C7Reg);
        assert_eq!(c.h_group, GroupDescriptor::DualTorus);
        assert_eq!(c.phv, PhvClass::P3(1));

        // m(q^2, q): case 5, H = GL2(g1), P2(0)
        let c = classify(&m(QValue::q_pow(2, 1), QValue::q())).unwrap();
        assert_eq!(c.case_id, CaseId::C5);
        assert_eq!(c.h_group, GroupDescriptor::GL2(G1));
        assert_eq!(c.phv, PhvClass::P2(0));

        // m(1, 1): case 0 with full centralizer
        let c = classify(&m(QValue::one(), QValue::one())).unwrap();
        assert_eq!(c.case_id, CaseId::C0);
        assert_eq!(c.h_group, GroupDescriptor::G2Dual);
        assert_eq!(c.phv, PhvClass::P0(FiniteGroup::Trivial));

        // m(theta3 q^{1/3}, theta3^2 q^{2/3}): case 3, H = GL2(g1+3g2), P2(1)
        let c = classify(&m(
            QValue::new(RootOfUnity::new(1, 3), rat(1, 3)),
            QValue::new(RootOfUnity::new(2, 3), rat(2, 3)),
        ))
        .unwrap();
        assert_eq!(c.case_id, CaseId::C3);
        assert_eq!(c.h_group, GroupDescriptor::GL2(G1_3G2));
        assert_eq!(c.phv, PhvClass::P2(1));

        // m(q, q): case 8, H = GL2(g2), P4
        let c = classify(&m(QValue::q(), QValue::q())).unwrap();
        assert_eq!(c.case_id, CaseId::C8Sub);
        assert_eq!(c.h_group, GroupDescriptor::GL2(G2R));
        assert_eq!(c.phv, PhvClass::P4);
    }

    #[test]
    fn case1_h_subcases() {
        // standard case-1 form m(q, u q^a); H = GL2(g1) exactly when
        // u^2 q^{2a-1} = 1, i.e. u = +-1 and a = 1/2
        let c = classify(&m(QValue::q(), QValue::q_pow(1, 2))).unwrap();
        assert_eq!(c.case_id, CaseId::C1Short);
        assert_eq!(c.h_group, GroupDescriptor::GL2(G1));
        let c = classify(&m(QValue::q(), QValue::q_pow(1, 5))).unwrap();
        assert_eq!(c.case_id, CaseId::C1Short);
        assert_eq!(c.h_group, GroupDescriptor::DualTorus);
    }

    #[test]
    fn classify_is_weyl_invariant() {
        let samples = [
            m(QValue::q(), minus_q()),
            m(QValue::q_pow(2, 1), QValue::q()),
            m(QValue::q_pow(5, 2), QValue::new(RootOfUnity::new(1, 3), rat(1, 6))),
            m(QValue::one(), QValue::one()),
        ];
        for lam in samples {
            let base = classify(&lam).unwrap();
            for w in weyl_elements() {
                let moved =
                    InfinitesimalParameter::new(weyl_act_torus(w, &lam.frobenius));
                let c = classify(&moved).unwrap();
                assert_eq!(c.case_id, base.case_id);
                assert_eq!(
                    std::mem::discriminant(&c.h_group),
                    std::mem::discriminant(&base.h_group)
                );
                assert_eq!(c.phv, base.phv);
            }
        }
    }

    #[test]
    fn reducibility_anchors() {
        // chi = theta2 nu (x) theta2: reducible, four orbits (case 4)
        let chi1 = minus_q();
        let chi2 = QValue::unit(RootOfUnity::minus_one());
        let rep = reducibility(&chi1, &chi2).unwrap();
        assert!(!rep.irreducible);
        assert!(!rep.two_orbit);

        // a generic unitary pair avoiding all conditions: irreducible
        let chi1 = QValue::unit(RootOfUnity::new(1, 5));
        let chi2 = QValue::unit(RootOfUnity::new(1, 7));
        let rep = reducibility(&chi1, &chi2).unwrap();
        assert!(rep.irreducible);

        // a case-1 parameter with u^2 q^{2a-1} != 1: two orbits
        // chi giving lambda(Fr) ~ m(q, u q^a): take chi1 = u q^a, chi2 = u^{-1} q^{1-a}
        let u = QValue::unit(RootOfUnity::new(1, 3));
        let chi1 = u.clone() * QValue::q_pow(1, 5);
        let chi2 = u.inverse() * QValue::q_pow(4, 5);
        let rep = reducibility(&chi1, &chi2).unwrap();
        assert!(!rep.irreducible);
        assert!(rep.two_orbit);
    }
}
