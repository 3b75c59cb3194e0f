//! The Langlands and microlocal classification tables for unipotent
//! representations of G2 and of its endoscopic groups with their pure
//! inner forms: parameter labels, packets, packet coefficients, the
//! bijection onto simple perverse-sheaf labels, and per-parameter
//! properties.
//!
//! Tables are stored as literal data; the coefficient tables are also
//! recomputed through the sheaf bijection and the microlocal tables, and
//! the two routes are compared entry by entry in the verify suite.

use crate::exactnum::{rat, Cyclo, QValue, Rational, RootOfUnity};
use crate::infclass::{classify, CaseId, InfinitesimalParameter};
use crate::phv::{
    nevs, orbit_data, CharCombo, CharId, ClassId, FiniteGroup, MicroSheaf, OrbitId, PhvClass,
};
use crate::rootdata::{coroot, Root, TorusElement, G1, G1_2G2, G1_3G2, G2R, TWO_G1_3G2};
use std::fmt;

// ---------------------------------------------------------------------------
// Groups, families, parameters
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum GroupId {
    G2,
    T,
    GL2Short,
    GL2Long,
    SO4,
    SO4Delta,
    PGL3,
    PGL3Delta,
    PGL3DeltaPrime,
}

impl GroupId {
    pub fn name(&self) -> &'static str {
        match self {
            GroupId::G2 => "G2",
            GroupId::T => "T",
            GroupId::GL2Short => "GL2s",
            GroupId::GL2Long => "GL2l",
            GroupId::SO4 => "SO4",
            GroupId::SO4Delta => "SO4d",
            GroupId::PGL3 => "PGL3",
            GroupId::PGL3Delta => "PGL3d",
            GroupId::PGL3DeltaPrime => "PGL3d'",
        }
    }

    /// The quasi-split group a pure inner form belongs to.
    pub fn base(&self) -> GroupId {
        match self {
            GroupId::SO4Delta => GroupId::SO4,
            GroupId::PGL3Delta | GroupId::PGL3DeltaPrime => GroupId::PGL3,
            g => *g,
        }
    }

    /// Split rank; inner-form signs come from the rank drop.
    pub fn split_rank(&self) -> u32 {
        match self {
            GroupId::G2 | GroupId::T | GroupId::SO4 | GroupId::PGL3 => 2,
            GroupId::GL2Short | GroupId::GL2Long => 2,
            GroupId::SO4Delta | GroupId::PGL3Delta | GroupId::PGL3DeltaPrime => 0,
        }
    }

    /// Kottwitz sign e(delta) = (-1)^(rank G - rank G^delta).
    pub fn kottwitz_sign(&self) -> i64 {
        let drop = self.base().split_rank() - self.split_rank();
        if drop % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Infinitesimal-parameter families.  G2 uses the nine cases; the
/// endoscopic groups use F0..F3 plus the extra split family F0' of SO4.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FamilyId {
    C(CaseId),
    F0,
    F0Prime,
    F1,
    F2,
    F3,
}

impl FamilyId {
    pub fn name(&self) -> String {
        match self {
            FamilyId::C(c) => c.name().to_string(),
            FamilyId::F0 => "0".into(),
            FamilyId::F0Prime => "0'".into(),
            FamilyId::F1 => "1".into(),
            FamilyId::F2 => "2".into(),
            FamilyId::F3 => "3".into(),
        }
    }
}

/// Orbit sublabels within a family, in closure order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sub {
    A,
    B,
    C,
    D,
}

impl Sub {
    pub const ALL: [Sub; 4] = [Sub::A, Sub::B, Sub::C, Sub::D];

    pub fn index(&self) -> usize {
        match self {
            Sub::A => 0,
            Sub::B => 1,
            Sub::C => 2,
            Sub::D => 3,
        }
    }

    pub fn from_index(i: usize) -> Sub {
        Sub::ALL[i]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Sub::A => "a",
            Sub::B => "b",
            Sub::C => "c",
            Sub::D => "d",
        }
    }
}

/// A table-level Langlands parameter label.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ParamId {
    pub group: GroupId,
    pub family: FamilyId,
    pub sub: Sub,
}

impl ParamId {
    pub fn new(group: GroupId, family: FamilyId, sub: Sub) -> Self {
        ParamId { group, family, sub }
    }

    pub fn g2(case: CaseId, sub: Sub) -> Self {
        ParamId::new(GroupId::G2, FamilyId::C(case), sub)
    }

    pub fn orbit(&self) -> OrbitId {
        OrbitId(self.sub.index())
    }
}

impl fmt::Display for ParamId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = family_info(self.group, self.family);
        if fam.params.len() == 1 {
            write!(f, "{}:{}", self.group.name(), self.family.name())
        } else {
            write!(
                f,
                "{}:{}{}",
                self.group.name(),
                self.family.name(),
                self.sub.name()
            )
        }
    }
}

// ---------------------------------------------------------------------------
// Representation labels
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum G2Repn {
    /// I(mu1 nu^a1 x mu2 nu^a2), the irreducible principal series
    PrincipalSeries,
    IG2MuDet,
    IG2MuSt,
    IG1MuDet,
    IG1MuSt,
    IG1CubicDet,
    IG1CubicSt,
    JG2PsTheta2,
    JG1StTheta2,
    JG2StTheta2,
    PiTheta2,
    I0MinusOne,
    IG2Triv,
    IG2St,
    JG2PsTheta3,
    JG1StTheta3Sq,
    JG1StTheta3,
    PiTheta3,
    I0Theta3,
    I0Theta3Sq,
    One,
    JG1St32,
    JG2St52,
    St,
    JG2PsOne,
    JG1StHalf,
    JG2StHalf,
    PiOnePrime,
    PiOne,
    I0One,
}

impl G2Repn {
    pub fn name(&self) -> &'static str {
        match self {
            G2Repn::PrincipalSeries => "I(mu1*nu^a1 x mu2*nu^a2)",
            G2Repn::IG2MuDet => "I_g2(a-1/2, mu.det)",
            G2Repn::IG2MuSt => "I_g2(a-1/2, mu x St)",
            G2Repn::IG1MuDet => "I_g1(a-1/2, mu.det)",
            G2Repn::IG1MuSt => "I_g1(a-1/2, mu x St)",
            G2Repn::IG1CubicDet => "I_g1(1/6, theta3^n.det)",
            G2Repn::IG1CubicSt => "I_g1(1/6, theta3^n x St)",
            G2Repn::JG2PsTheta2 => "J_g2(1, I(1 x theta2))",
            G2Repn::JG1StTheta2 => "J_g1(1/2, theta2 x St)",
            G2Repn::JG2StTheta2 => "J_g2(1/2, theta2 x St)",
            G2Repn::PiTheta2 => "pi(theta2)",
            G2Repn::I0MinusOne => "I0(G2[-1])",
            G2Repn::IG2Triv => "I_g2(3/2, 1)",
            G2Repn::IG2St => "I_g2(3/2, St)",
            G2Repn::JG2PsTheta3 => "J_g2(1, I(theta3 x theta3^-1))",
            G2Repn::JG1StTheta3Sq => "J_g1(1/2, theta3^2 x St)",
            G2Repn::JG1StTheta3 => "J_g1(1/2, theta3 x St)",
            G2Repn::PiTheta3 => "pi(theta3)",
            G2Repn::I0Theta3 => "I0(G2[theta3])",
            G2Repn::I0Theta3Sq => "I0(G2[theta3^2])",
            G2Repn::One => "1_G2",
            G2Repn::JG1St32 => "J_g1(3/2, St)",
            G2Repn::JG2St52 => "J_g2(5/2, St)",
            G2Repn::St => "St_G2",
            G2Repn::JG2PsOne => "J_g2(1, I(1 x 1))",
            G2Repn::JG1StHalf => "J_g1(1/2, St)",
            G2Repn::JG2StHalf => "J_g2(1/2, St)",
            G2Repn::PiOnePrime => "pi(1)'",
            G2Repn::PiOne => "pi(1)",
            G2Repn::I0One => "I0(G2[1])",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum TRepn {
    Char,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum GL2Repn {
    Ps,
    TrivTwist,
    StTwist,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum SO4Repn {
    Ps,
    Pi4,
    Pi4Prime,
    IB1Det,
    IB1St,
    IB2Det,
    IB2St,
    Chi,
    JB1St,
    JB2St,
    ChiSt,
    ChiDelta,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum PGL3Repn {
    Ps,
    IA1Det,
    IA1St,
    ICubicDet,
    ICubicSt,
    Chi,
    JNuSt,
    JStNu,
    ChiSt,
    ChiDelta,
    ChiDeltaPrime,
}

/// A representation label of one of the groups in play.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Repn {
    G2(G2Repn),
    T(TRepn),
    GL2(GL2Repn),
    SO4(SO4Repn),
    PGL3(PGL3Repn),
}

impl Repn {
    pub fn name(&self) -> String {
        match self {
            Repn::G2(r) => r.name().to_string(),
            Repn::T(_) => "chi1 x chi2".into(),
            Repn::GL2(GL2Repn::Ps) => "I(chi1 x chi2)".into(),
            Repn::GL2(GL2Repn::TrivTwist) => "chi.det x 1".into(),
            Repn::GL2(GL2Repn::StTwist) => "chi.det x St".into(),
            Repn::SO4(SO4Repn::Ps) => "I(chi1 x chi2)".into(),
            Repn::SO4(SO4Repn::Pi4) => "pi4".into(),
            Repn::SO4(SO4Repn::Pi4Prime) => "pi4'".into(),
            Repn::SO4(SO4Repn::IB1Det) => "I_b1(chi.det)".into(),
            Repn::SO4(SO4Repn::IB1St) => "I_b1(chi x St)".into(),
            Repn::SO4(SO4Repn::IB2Det) => "I_b2(chi.det)".into(),
            Repn::SO4(SO4Repn::IB2St) => "I_b2(chi x St)".into(),
            Repn::SO4(SO4Repn::Chi) => "chi_SO4".into(),
            Repn::SO4(SO4Repn::JB1St) => "J_b1(1/2, chi x St)".into(),
            Repn::SO4(SO4Repn::JB2St) => "J_b2(1/2, chi x St)".into(),
            Repn::SO4(SO4Repn::ChiSt) => "chi x St_SO4".into(),
            Repn::SO4(SO4Repn::ChiDelta) => "chi_SO4d".into(),
            Repn::PGL3(PGL3Repn::Ps) => "I(chi1 x chi2)".into(),
            Repn::PGL3(PGL3Repn::IA1Det) => "I_a1(chi.det x chi^-2)".into(),
            Repn::PGL3(PGL3Repn::IA1St) => "I_a1(chi*St x chi^-2)".into(),
            Repn::PGL3(PGL3Repn::ICubicDet) => "I_a1(chi*nu^(1/6).det x chi*nu^(-1/3))".into(),
            Repn::PGL3(PGL3Repn::ICubicSt) => "I_a1(chi*nu^(1/6)*St x chi*nu^(-1/3))".into(),
            Repn::PGL3(PGL3Repn::Chi) => "chi_PGL3".into(),
            Repn::PGL3(PGL3Repn::JNuSt) => "chi x J_a1(nu x nu^(-1/2)*St)".into(),
            Repn::PGL3(PGL3Repn::JStNu) => "chi x J_a1(nu^(1/2)*St x nu^-1)".into(),
            Repn::PGL3(PGL3Repn::ChiSt) => "chi x St_PGL3".into(),
            Repn::PGL3(PGL3Repn::ChiDelta) => "chi_PGL3d".into(),
            Repn::PGL3(PGL3Repn::ChiDeltaPrime) => "chi_PGL3d'".into(),
        }
    }

    /// The pure inner form a representation lives on.
    pub fn home(&self, base: GroupId) -> GroupId {
        match self {
            Repn::SO4(SO4Repn::ChiDelta) => GroupId::SO4Delta,
            Repn::PGL3(PGL3Repn::ChiDelta) => GroupId::PGL3Delta,
            Repn::PGL3(PGL3Repn::ChiDeltaPrime) => GroupId::PGL3DeltaPrime,
            _ => base,
        }
    }
}

// ---------------------------------------------------------------------------
// Family tables
// ---------------------------------------------------------------------------

/// When a parameter of a family is of Arthur type, as a predicate on its
/// continuous data.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ArthurCondition {
    Always,
    Never,
    /// the real exponent a equals 1/2
    ExponentHalf,
    /// both exponents vanish (unitary characters)
    ExponentsZero,
    /// the twisting character is unitary (exponent zero)
    UnitaryChi,
}

/// Everything the tables know about one family: its geometry, the
/// parameters in orbit order, the bijection between representation labels
/// and simple objects, and the two stored coefficient tables.
#[derive(Clone, Debug)]
pub struct FamilyInfo {
    pub group: GroupId,
    pub family: FamilyId,
    pub phv: PhvClass,
    /// parameter sublabels in orbit order
    pub params: Vec<Sub>,
    /// representation <-> simple object (the rows of the master table)
    pub reps: Vec<(Repn, MicroSheaf)>,
    /// stored packet-coefficient table: per rep, per param, a character of
    /// the parameter's microlocal fundamental group
    pub abv: Vec<Vec<Option<CharId>>>,
    /// stored Langlands-correspondence table: per rep, per param, a
    /// character of the parameter's component group
    pub llc: Vec<Vec<Option<CharId>>>,
    pub arthur: Vec<ArthurCondition>,
}

impl FamilyInfo {
    pub fn param_ids(&self) -> Vec<ParamId> {
        self.params
            .iter()
            .map(|s| ParamId::new(self.group, self.family, *s))
            .collect()
    }

    pub fn rep_index(&self, r: Repn) -> Option<usize> {
        self.reps.iter().position(|(x, _)| *x == r)
    }

    pub fn sheaf_of(&self, r: Repn) -> Option<MicroSheaf> {
        self.reps
            .iter()
            .find(|(x, _)| *x == r)
            .map(|(_, sheaf)| *sheaf)
    }

    pub fn rep_of_sheaf(&self, m: MicroSheaf) -> Option<Repn> {
        self.reps
            .iter()
            .find(|(_, sheaf)| *sheaf == m)
            .map(|(r, _)| *r)
    }

    pub fn a_abv(&self, sub: Sub) -> FiniteGroup {
        orbit_data(&self.phv, OrbitId(sub.index())).a_abv
    }

    pub fn a_phi(&self, sub: Sub) -> FiniteGroup {
        orbit_data(&self.phv, OrbitId(sub.index())).a_c
    }

    pub fn dim(&self, sub: Sub) -> u32 {
        orbit_data(&self.phv, OrbitId(sub.index())).dim
    }
}

fn sheaf(o: usize, c: usize) -> MicroSheaf {
    MicroSheaf::new(o, c)
}

/// Shorthand for building the stored tables: one row per rep, one column
/// per parameter; `None` marks an empty cell and `Some(k)` the k-th
/// character of the relevant group.
fn row(cells: &[i64]) -> Vec<Option<CharId>> {
    cells
        .iter()
        .map(|&c| if c < 0 { None } else { Some(CharId(c as usize)) })
        .collect()
}

pub fn g2_family(case: CaseId) -> FamilyInfo {
    use G2Repn::*;
    let g2 = |r: G2Repn, o: usize, c: usize| (Repn::G2(r), sheaf(o, c));
    let (phv, params, reps, abv, llc, arthur) = match case {
        CaseId::C0 => (
            PhvClass::P0(FiniteGroup::Trivial),
            vec![Sub::A],
            vec![g2(PrincipalSeries, 0, 0)],
            vec![row(&[0])],
            vec![row(&[0])],
            vec![ArthurCondition::ExponentsZero],
        ),
        CaseId::C1Short => (
            PhvClass::P1,
            vec![Sub::A, Sub::B],
            vec![g2(IG2MuDet, 0, 0), g2(IG2MuSt, 1, 0)],
            vec![row(&[0, -1]), row(&[-1, 0])],
            vec![row(&[0, -1]), row(&[-1, 0])],
            vec![ArthurCondition::ExponentHalf; 2],
        ),
        CaseId::C2Long => (
            PhvClass::P1,
            vec![Sub::A, Sub::B],
            vec![g2(IG1MuDet, 0, 0), g2(IG1MuSt, 1, 0)],
            vec![row(&[0, -1]), row(&[-1, 0])],
            vec![row(&[0, -1]), row(&[-1, 0])],
            vec![ArthurCondition::ExponentHalf; 2],
        ),
        CaseId::C3 => (
            PhvClass::P2(1),
            vec![Sub::A, Sub::B],
            vec![g2(IG1CubicDet, 0, 0), g2(IG1CubicSt, 1, 0)],
            vec![row(&[0, -1]), row(&[-1, 0])],
            vec![row(&[0, -1]), row(&[-1, 0])],
            vec![ArthurCondition::Never; 2],
        ),
        CaseId::C4D2 => (
            PhvClass::P3(2),
            vec![Sub::A, Sub::B, Sub::C, Sub::D],
            vec![
                g2(JG2PsTheta2, 0, 0),
                g2(JG1StTheta2, 1, 0),
                g2(JG2StTheta2, 2, 0),
                g2(PiTheta2, 3, 0),
                g2(I0MinusOne, 3, 1),
            ],
            vec![
                row(&[0, -1, -1, -1]),
                row(&[-1, 0, -1, -1]),
                row(&[-1, -1, 0, -1]),
                row(&[-1, -1, -1, 0]),
                row(&[1, 1, 1, 1]),
            ],
            vec![
                row(&[0, -1, -1, -1]),
                row(&[-1, 0, -1, -1]),
                row(&[-1, -1, 0, -1]),
                row(&[-1, -1, -1, 0]),
                row(&[-1, -1, -1, 1]),
            ],
            vec![ArthurCondition::Always; 4],
        ),
        CaseId::C5 => (
            PhvClass::P2(0),
            vec![Sub::A, Sub::B],
            vec![g2(IG2Triv, 0, 0), g2(IG2St, 1, 0)],
            vec![row(&[0, -1]), row(&[-1, 0])],
            vec![row(&[0, -1]), row(&[-1, 0])],
            vec![ArthurCondition::Never; 2],
        ),
        CaseId::C6A2 => (
            PhvClass::P3(3),
            vec![Sub::A, Sub::B, Sub::C, Sub::D],
            vec![
                g2(JG2PsTheta3, 0, 0),
                g2(JG1StTheta3Sq, 1, 0),
                g2(JG1StTheta3, 2, 0),
                g2(PiTheta3, 3, 0),
                g2(I0Theta3, 3, 1),
                g2(I0Theta3Sq, 3, 2),
            ],
            vec![
                row(&[0, -1, -1, -1]),
                row(&[-1, 0, -1, -1]),
                row(&[-1, -1, 0, -1]),
                row(&[-1, -1, -1, 0]),
                row(&[1, 1, 1, 1]),
                row(&[2, 2, 2, 2]),
            ],
            vec![
                row(&[0, -1, -1, -1]),
                row(&[-1, 0, -1, -1]),
                row(&[-1, -1, 0, -1]),
                row(&[-1, -1, -1, 0]),
                row(&[-1, -1, -1, 1]),
                row(&[-1, -1, -1, 2]),
            ],
            vec![
                ArthurCondition::Always,
                ArthurCondition::Never,
                ArthurCondition::Never,
                ArthurCondition::Always,
            ],
        ),
        CaseId::C7Reg => (
            PhvClass::P3(1),
            vec![Sub::A, Sub::B, Sub::C, Sub::D],
            vec![
                g2(One, 0, 0),
                g2(JG1St32, 1, 0),
                g2(JG2St52, 2, 0),
                g2(St, 3, 0),
            ],
            vec![
                row(&[0, -1, -1, -1]),
                row(&[-1, 0, -1, -1]),
                row(&[-1, -1, 0, -1]),
                row(&[-1, -1, -1, 0]),
            ],
            vec![
                row(&[0, -1, -1, -1]),
                row(&[-1, 0, -1, -1]),
                row(&[-1, -1, 0, -1]),
                row(&[-1, -1, -1, 0]),
            ],
            vec![
                ArthurCondition::Always,
                ArthurCondition::Never,
                ArthurCondition::Never,
                ArthurCondition::Always,
            ],
        ),
        CaseId::C8Sub => (
            PhvClass::P4,
            vec![Sub::A, Sub::B, Sub::C, Sub::D],
            vec![
                g2(JG2PsOne, 0, 0),
                g2(JG1StHalf, 1, 0),
                g2(JG2StHalf, 2, 0),
                g2(PiOnePrime, 3, 0),
                g2(PiOne, 3, 2),
                g2(I0One, 3, 1),
            ],
            // microlocal groups: S3, Z2, Z2, S3; S3 characters are
            // 0 = 1, 1 = eps, 2 = varrho
            vec![
                row(&[0, -1, -1, -1]),
                row(&[2, 0, -1, -1]),
                row(&[-1, 1, 0, -1]),
                row(&[-1, -1, -1, 0]),
                row(&[-1, -1, 1, 2]),
                row(&[1, 0, 1, 1]),
            ],
            vec![
                row(&[0, -1, -1, -1]),
                row(&[-1, 0, -1, -1]),
                row(&[-1, -1, 0, -1]),
                row(&[-1, -1, -1, 0]),
                row(&[-1, -1, -1, 2]),
                row(&[-1, -1, -1, 1]),
            ],
            vec![ArthurCondition::Always; 4],
        ),
    };
    FamilyInfo {
        group: GroupId::G2,
        family: FamilyId::C(case),
        phv,
        params,
        reps,
        abv,
        llc,
        arthur,
    }
}

pub fn endoscopic_family(group: GroupId, family: FamilyId) -> Option<FamilyInfo> {
    let triv = PhvClass::P0(FiniteGroup::Trivial);
    let diag2 = || (vec![row(&[0, -1]), row(&[-1, 0])], vec![row(&[0, -1]), row(&[-1, 0])]);
    let info = match (group, family) {
        (GroupId::T, FamilyId::F0) => FamilyInfo {
            group,
            family,
            phv: triv,
            params: vec![Sub::A],
            reps: vec![(Repn::T(TRepn::Char), sheaf(0, 0))],
            abv: vec![row(&[0])],
            llc: vec![row(&[0])],
            arthur: vec![ArthurCondition::ExponentsZero],
        },
        (GroupId::GL2Short | GroupId::GL2Long, FamilyId::F0) => FamilyInfo {
            group,
            family,
            phv: triv,
            params: vec![Sub::A],
            reps: vec![(Repn::GL2(GL2Repn::Ps), sheaf(0, 0))],
            abv: vec![row(&[0])],
            llc: vec![row(&[0])],
            arthur: vec![ArthurCondition::ExponentsZero],
        },
        (GroupId::GL2Short | GroupId::GL2Long, FamilyId::F1) => {
            let (abv, llc) = diag2();
            FamilyInfo {
                group,
                family,
                phv: PhvClass::P1,
                params: vec![Sub::A, Sub::B],
                reps: vec![
                    (Repn::GL2(GL2Repn::TrivTwist), sheaf(0, 0)),
                    (Repn::GL2(GL2Repn::StTwist), sheaf(1, 0)),
                ],
                abv,
                llc,
                arthur: vec![ArthurCondition::UnitaryChi; 2],
            }
        }
        (GroupId::SO4, FamilyId::F0) => FamilyInfo {
            group,
            family,
            phv: triv,
            params: vec![Sub::A],
            reps: vec![(Repn::SO4(SO4Repn::Ps), sheaf(0, 0))],
            abv: vec![row(&[0])],
            llc: vec![row(&[0])],
            arthur: vec![ArthurCondition::ExponentsZero],
        },
        (GroupId::SO4, FamilyId::F0Prime) => FamilyInfo {
            group,
            family,
            // the moduli space is a point, but the acting group is the
            // disconnected S(O2 x O2) with two components
            phv: PhvClass::P0(FiniteGroup::Cyclic(2)),
            params: vec![Sub::A],
            reps: vec![
                (Repn::SO4(SO4Repn::Pi4), sheaf(0, 0)),
                (Repn::SO4(SO4Repn::Pi4Prime), sheaf(0, 1)),
            ],
            abv: vec![row(&[0]), row(&[1])],
            llc: vec![row(&[0]), row(&[1])],
            arthur: vec![ArthurCondition::Always],
        },
        (GroupId::SO4, FamilyId::F1) => {
            let (abv, llc) = diag2();
            FamilyInfo {
                group,
                family,
                phv: PhvClass::P1,
                params: vec![Sub::A, Sub::B],
                reps: vec![
                    (Repn::SO4(SO4Repn::IB1Det), sheaf(0, 0)),
                    (Repn::SO4(SO4Repn::IB1St), sheaf(1, 0)),
                ],
                abv,
                llc,
                arthur: vec![ArthurCondition::UnitaryChi; 2],
            }
        }
        (GroupId::SO4, FamilyId::F2) => {
            let (abv, llc) = diag2();
            FamilyInfo {
                group,
                family,
                phv: PhvClass::P1,
                params: vec![Sub::A, Sub::B],
                reps: vec![
                    (Repn::SO4(SO4Repn::IB2Det), sheaf(0, 0)),
                    (Repn::SO4(SO4Repn::IB2St), sheaf(1, 0)),
                ],
                abv,
                llc,
                arthur: vec![ArthurCondition::UnitaryChi; 2],
            }
        }
        (GroupId::SO4, FamilyId::F3) => FamilyInfo {
            group,
            family,
            phv: PhvClass::P3(2),
            params: vec![Sub::A, Sub::B, Sub::C, Sub::D],
            reps: vec![
                (Repn::SO4(SO4Repn::Chi), sheaf(0, 0)),
                (Repn::SO4(SO4Repn::JB1St), sheaf(1, 0)),
                (Repn::SO4(SO4Repn::JB2St), sheaf(2, 0)),
                (Repn::SO4(SO4Repn::ChiSt), sheaf(3, 0)),
                (Repn::SO4(SO4Repn::ChiDelta), sheaf(3, 1)),
            ],
            abv: vec![
                row(&[0, -1, -1, -1]),
                row(&[-1, 0, -1, -1]),
                row(&[-1, -1, 0, -1]),
                row(&[-1, -1, -1, 0]),
                row(&[1, 1, 1, 1]),
            ],
            llc: vec![
                row(&[0, -1, -1, -1]),
                row(&[-1, 0, -1, -1]),
                row(&[-1, -1, 0, -1]),
                row(&[-1, -1, -1, 0]),
                row(&[-1, -1, -1, 1]),
            ],
            arthur: vec![ArthurCondition::Always; 4],
        },
        (GroupId::PGL3, FamilyId::F0) => FamilyInfo {
            group,
            family,
            phv: triv,
            params: vec![Sub::A],
            reps: vec![(Repn::PGL3(PGL3Repn::Ps), sheaf(0, 0))],
            abv: vec![row(&[0])],
            llc: vec![row(&[0])],
            arthur: vec![ArthurCondition::ExponentsZero],
        },
        (GroupId::PGL3, FamilyId::F1) => {
            let (abv, llc) = diag2();
            FamilyInfo {
                group,
                family,
                phv: PhvClass::P1,
                params: vec![Sub::A, Sub::B],
                reps: vec![
                    (Repn::PGL3(PGL3Repn::IA1Det), sheaf(0, 0)),
                    (Repn::PGL3(PGL3Repn::IA1St), sheaf(1, 0)),
                ],
                abv,
                llc,
                arthur: vec![ArthurCondition::UnitaryChi; 2],
            }
        }
        (GroupId::PGL3, FamilyId::F2) => {
            let (abv, llc) = diag2();
            FamilyInfo {
                group,
                family,
                phv: PhvClass::P1,
                params: vec![Sub::A, Sub::B],
                reps: vec![
                    (Repn::PGL3(PGL3Repn::ICubicDet), sheaf(0, 0)),
                    (Repn::PGL3(PGL3Repn::ICubicSt), sheaf(1, 0)),
                ],
                abv,
                llc,
                arthur: vec![ArthurCondition::Never; 2],
            }
        }
        (GroupId::PGL3, FamilyId::F3) => FamilyInfo {
            group,
            family,
            phv: PhvClass::P3(3),
            params: vec![Sub::A, Sub::B, Sub::C, Sub::D],
            reps: vec![
                (Repn::PGL3(PGL3Repn::Chi), sheaf(0, 0)),
                (Repn::PGL3(PGL3Repn::JNuSt), sheaf(1, 0)),
                (Repn::PGL3(PGL3Repn::JStNu), sheaf(2, 0)),
                (Repn::PGL3(PGL3Repn::ChiSt), sheaf(3, 0)),
                (Repn::PGL3(PGL3Repn::ChiDelta), sheaf(3, 1)),
                (Repn::PGL3(PGL3Repn::ChiDeltaPrime), sheaf(3, 2)),
            ],
            abv: vec![
                row(&[0, -1, -1, -1]),
                row(&[-1, 0, -1, -1]),
                row(&[-1, -1, 0, -1]),
                row(&[-1, -1, -1, 0]),
                row(&[1, 1, 1, 1]),
                row(&[2, 2, 2, 2]),
            ],
            llc: vec![
                row(&[0, -1, -1, -1]),
                row(&[-1, 0, -1, -1]),
                row(&[-1, -1, 0, -1]),
                row(&[-1, -1, -1, 0]),
                row(&[-1, -1, -1, 1]),
                row(&[-1, -1, -1, 2]),
            ],
            arthur: vec![
                ArthurCondition::Always,
                ArthurCondition::Never,
                ArthurCondition::Never,
                ArthurCondition::Always,
            ],
        },
        _ => return None,
    };
    Some(info)
}

pub fn family_info(group: GroupId, family: FamilyId) -> FamilyInfo {
    match (group, family) {
        (GroupId::G2, FamilyId::C(case)) => g2_family(case),
        _ => endoscopic_family(group, family)
            .unwrap_or_else(|| panic!("no family {family:?} for {group:?}")),
    }
}

pub fn g2_families() -> Vec<FamilyInfo> {
    CaseId::ALL.iter().map(|c| g2_family(*c)).collect()
}

pub fn families_of(group: GroupId) -> Vec<FamilyInfo> {
    match group {
        GroupId::G2 => g2_families(),
        GroupId::T => vec![family_info(group, FamilyId::F0)],
        GroupId::GL2Short | GroupId::GL2Long => vec![
            family_info(group, FamilyId::F0),
            family_info(group, FamilyId::F1),
        ],
        GroupId::SO4 => vec![
            family_info(group, FamilyId::F0),
            family_info(group, FamilyId::F0Prime),
            family_info(group, FamilyId::F1),
            family_info(group, FamilyId::F2),
            family_info(group, FamilyId::F3),
        ],
        GroupId::PGL3 => vec![
            family_info(group, FamilyId::F0),
            family_info(group, FamilyId::F1),
            family_info(group, FamilyId::F2),
            family_info(group, FamilyId::F3),
        ],
        other => families_of(other.base()),
    }
}

/// All 25 G2 parameter labels.
pub fn g2_params() -> Vec<ParamId> {
    g2_families().iter().flat_map(|f| f.param_ids()).collect()
}

// ---------------------------------------------------------------------------
// Packets and coefficients
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PacketError {
    #[error("{0:?} is not in the packet of {1}")]
    NotInPacket(Repn, String),
    #[error("stored and recomputed coefficient disagree for {0:?} at {1}")]
    RouteMismatch(Repn, String),
}

/// Rows of the stored packet table with a nonzero entry in the column of
/// `phi`, with their characters.
pub fn abv_packet(phi: ParamId) -> Vec<(Repn, CharId)> {
    let fam = family_info(phi.group, phi.family);
    let col = phi.sub.index();
    fam.reps
        .iter()
        .zip(&fam.abv)
        .filter_map(|((r, _), cells)| cells[col].map(|c| (*r, c)))
        .collect()
}

/// Rows of the stored Langlands table with a nonzero entry in the column
/// of `phi`.
pub fn l_packet(phi: ParamId) -> Vec<(Repn, CharId)> {
    let fam = family_info(phi.group, phi.family);
    let col = phi.sub.index();
    fam.reps
        .iter()
        .zip(&fam.llc)
        .filter_map(|((r, _), cells)| cells[col].map(|c| (*r, c)))
        .collect()
}

/// Members of the packet outside the Langlands packet.
pub fn coronal(phi: ParamId) -> Vec<(Repn, CharId)> {
    let l: Vec<Repn> = l_packet(phi).into_iter().map(|(r, _)| r).collect();
    abv_packet(phi)
        .into_iter()
        .filter(|(r, _)| !l.contains(r))
        .collect()
}

/// The packet coefficient as a character combination, computed through the
/// sheaf bijection and the microlocal table.
pub fn coefficient_computed(phi: ParamId, pi: Repn) -> Option<CharCombo> {
    let fam = family_info(phi.group, phi.family);
    let sheaf = fam.sheaf_of(pi)?;
    let value = nevs(&fam.phv, &sheaf);
    let combo = value.at(phi.orbit());
    if combo.is_zero() {
        None
    } else {
        Some(combo.clone())
    }
}

/// The coefficient <s, pi>: looked up in the stored table and recomputed
/// through the geometry; the two routes must agree.
pub fn coefficient(phi: ParamId, s: ClassId, pi: Repn) -> Result<Cyclo, PacketError> {
    let fam = family_info(phi.group, phi.family);
    let stored = abv_packet(phi)
        .into_iter()
        .find(|(r, _)| *r == pi)
        .map(|(_, c)| c)
        .ok_or_else(|| PacketError::NotInPacket(pi, phi.to_string()))?;
    let group = fam.a_abv(phi.sub);
    let from_table = group.char_value(stored, s);
    let combo = coefficient_computed(phi, pi)
        .ok_or_else(|| PacketError::NotInPacket(pi, phi.to_string()))?;
    if combo.as_single() != Some(stored) {
        return Err(PacketError::RouteMismatch(pi, phi.to_string()));
    }
    let from_geometry = combo.trace(s);
    if from_table != from_geometry {
        return Err(PacketError::RouteMismatch(pi, phi.to_string()));
    }
    Ok(from_table)
}

// ---------------------------------------------------------------------------
// Per-parameter properties
// ---------------------------------------------------------------------------

/// Continuous data a parameter family may depend on.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ContinuousData {
    None,
    /// one polar pair u q^a
    UnitExp { u: RootOfUnity, a: Rational },
    /// a root of unity of bounded order (quadratic or cubic twists)
    Unit { u: RootOfUnity },
    /// two full values (the 0-families)
    TwoChars { x1: QValue, x2: QValue },
}

impl ContinuousData {
    pub fn arthur_satisfied(&self, cond: ArthurCondition) -> bool {
        match cond {
            ArthurCondition::Always => true,
            ArthurCondition::Never => false,
            ArthurCondition::ExponentHalf => match self {
                ContinuousData::UnitExp { a, .. } => *a == rat(1, 2),
                _ => false,
            },
            ArthurCondition::ExponentsZero => match self {
                ContinuousData::TwoChars { x1, x2 } => {
                    x1.exponent == rat(0, 1) && x2.exponent == rat(0, 1)
                }
                ContinuousData::None => true,
                _ => false,
            },
            ArthurCondition::UnitaryChi => match self {
                ContinuousData::UnitExp { a, .. } => *a == rat(0, 1),
                ContinuousData::Unit { .. } => true,
                _ => false,
            },
        }
    }
}

/// The frobenius value of a G2 parameter family on standard representatives.
pub fn g2_frobenius(case: CaseId, data: &ContinuousData) -> Option<TorusElement> {
    let q = QValue::q();
    match (case, data) {
        (CaseId::C0, ContinuousData::TwoChars { x1, x2 }) => {
            Some(TorusElement::new(x1.clone(), x2.clone()))
        }
        (CaseId::C1Short, ContinuousData::UnitExp { u, a }) => Some(TorusElement::new(
            q,
            QValue::new(u.clone(), a.clone()),
        )),
        (CaseId::C2Long, ContinuousData::UnitExp { u, a }) => {
            let x = QValue::new(u.clone(), a.clone());
            let y = x.inverse() * q;
            Some(TorusElement::new(x, y))
        }
        (CaseId::C3, ContinuousData::Unit { u }) => {
            if u.pow(3).is_one() {
                Some(TorusElement::new(
                    QValue::new(u.clone(), rat(1, 3)),
                    QValue::new(u.pow(2), rat(2, 3)),
                ))
            } else {
                None
            }
        }
        (CaseId::C4D2, ContinuousData::None) => Some(TorusElement::new(
            q,
            QValue::new(RootOfUnity::minus_one(), rat(1, 1)),
        )),
        (CaseId::C5, ContinuousData::None) => {
            Some(TorusElement::new(QValue::q_pow(2, 1), QValue::q()))
        }
        (CaseId::C6A2, ContinuousData::None) => Some(TorusElement::new(
            QValue::new(RootOfUnity::new(1, 3), rat(1, 1)),
            QValue::new(RootOfUnity::new(2, 3), rat(1, 1)),
        )),
        (CaseId::C7Reg, ContinuousData::None) => {
            Some(TorusElement::new(QValue::q_pow(3, 1), QValue::q_pow(2, 1)))
        }
        (CaseId::C8Sub, ContinuousData::None) => Some(TorusElement::new(QValue::q(), QValue::q())),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("continuous data does not satisfy the conditions of family {0}")]
    InvalidData(String),
    #[error("parameter {0} is not of Arthur type")]
    NotArthurType(String),
}

/// Validate that continuous data lands in the stated G2 family: the
/// classifier run on the assembled Frobenius value must reproduce the
/// family's case.
pub fn validate_g2_data(case: CaseId, data: &ContinuousData) -> Result<(), ParamError> {
    let frob = g2_frobenius(case, data)
        .ok_or_else(|| ParamError::InvalidData(case.name().to_string()))?;
    let got = classify(&InfinitesimalParameter::new(frob))
        .map_err(|_| ParamError::InvalidData(case.name().to_string()))?;
    if got.case_id == case {
        Ok(())
    } else {
        Err(ParamError::InvalidData(case.name().to_string()))
    }
}

/// The coroot word for the second SL2-factor of the Arthur parameter of an
/// Arthur-type G2 parameter; the image of -1 under this word is the
/// element whose class twists the distribution identity.
fn arthur_sl2_word(phi: ParamId) -> Option<Vec<(Root, i64)>> {
    let FamilyId::C(case) = phi.family else {
        return None;
    };
    let w: Vec<(Root, i64)> = match (case, phi.sub) {
        (CaseId::C0, Sub::A) => vec![],
        (CaseId::C1Short, Sub::A) => vec![(G1_2G2, 1)],
        (CaseId::C1Short, Sub::B) => vec![],
        (CaseId::C2Long, Sub::A) => vec![(TWO_G1_3G2, 1)],
        (CaseId::C2Long, Sub::B) => vec![],
        (CaseId::C4D2, Sub::A) => vec![(G1, 1), (G1_2G2, 1)],
        (CaseId::C4D2, Sub::B) => vec![(G1_2G2, 1)],
        (CaseId::C4D2, Sub::C) => vec![(G1, 1)],
        (CaseId::C4D2, Sub::D) => vec![],
        (CaseId::C6A2, Sub::A) => vec![(G1, 2), (G1_3G2, 2)],
        (CaseId::C6A2, Sub::D) => vec![],
        // regular sl2: h = 10 g1^ + 6 g2^
        (CaseId::C7Reg, Sub::A) => vec![(G1, 10), (G2R, 6)],
        (CaseId::C7Reg, Sub::D) => vec![],
        (CaseId::C8Sub, Sub::A) => vec![(G1, 1), (G1_2G2, 1)],
        (CaseId::C8Sub, Sub::B) => vec![(G1_2G2, 1)],
        (CaseId::C8Sub, Sub::C) => vec![(G1, 1)],
        (CaseId::C8Sub, Sub::D) => vec![],
        _ => return None,
    };
    Some(w)
}

/// The torus element s_psi = psi(1, 1, -1), computed by coroot arithmetic
/// from the stored sl2 word.
pub fn s_psi_torus(phi: ParamId) -> Option<TorusElement> {
    let word = arthur_sl2_word(phi)?;
    let minus_one = QValue::unit(RootOfUnity::minus_one());
    let mut t = TorusElement::identity();
    for (root, coeff) in word {
        t = t.mul(&coroot(root, &minus_one.pow(coeff)));
    }
    Some(t)
}

/// The class of a torus element inside the microlocal fundamental group of
/// a G2 parameter.  Only the identity and m(1,-1) arise; the latter maps
/// to the order-2 class wherever the group has one.
pub fn class_of_s_element(phi: ParamId, t: &TorusElement) -> ClassId {
    if t.is_identity() {
        return ClassId(0);
    }
    let fam = family_info(phi.group, phi.family);
    let expected = TorusElement::new(QValue::one(), QValue::unit(RootOfUnity::minus_one()));
    assert_eq!(*t, expected, "only m(1,-1) arises as a nontrivial s_psi");
    match fam.a_abv(phi.sub) {
        FiniteGroup::Trivial => ClassId(0),
        FiniteGroup::Cyclic(2) => ClassId(1),
        // the image of an order-2 element in S3 is the transposition class
        FiniteGroup::S3 => ClassId(1),
        g => panic!("no order-2 class in {g:?}"),
    }
}

/// s_psi as a class of the microlocal fundamental group, for Arthur-type
/// parameters with fixed continuous data.
pub fn s_psi_class(phi: ParamId) -> Option<ClassId> {
    s_psi_torus(phi).map(|t| class_of_s_element(phi, &t))
}

/// The minimal endoscopic groups a G2 parameter factors through.
pub fn minimal_endoscopic_groups(phi: ParamId) -> Vec<GroupId> {
    use CaseId::*;
    use GroupId::*;
    let FamilyId::C(case) = phi.family else {
        return vec![];
    };
    match (case, phi.sub) {
        (C0, _) => vec![T],
        (C1Short, Sub::A) | (C2Long, Sub::A) | (C3, Sub::A) | (C4D2, Sub::A) | (C5, Sub::A)
        | (C6A2, Sub::A) | (C7Reg, Sub::A) | (C8Sub, Sub::A) => vec![T],
        (C1Short, Sub::B) => vec![GL2Short],
        (C2Long, Sub::B) => vec![GL2Long],
        (C3, Sub::B) => vec![GL2Long],
        (C4D2, Sub::B) => vec![GL2Long],
        (C4D2, Sub::C) => vec![GL2Short],
        (C4D2, Sub::D) => vec![SO4],
        (C5, Sub::B) => vec![GL2Short],
        (C6A2, Sub::B) | (C6A2, Sub::C) => vec![GL2Long],
        (C6A2, Sub::D) => vec![PGL3],
        (C7Reg, Sub::B) => vec![GL2Long],
        (C7Reg, Sub::C) => vec![GL2Short],
        (C7Reg, Sub::D) => vec![G2],
        (C8Sub, Sub::B) => vec![GL2Long],
        (C8Sub, Sub::C) => vec![GL2Short],
        (C8Sub, Sub::D) => vec![SO4, PGL3],
        _ => unreachable!("invalid G2 parameter"),
    }
}

/// The elliptic G2 parameters: the tempered members of the three families
/// with elliptic endoscopy plus the Steinberg parameter.
pub fn is_elliptic(phi: ParamId) -> bool {
    matches!(
        (phi.family, phi.sub),
        (FamilyId::C(CaseId::C4D2), Sub::D)
            | (FamilyId::C(CaseId::C6A2), Sub::D)
            | (FamilyId::C(CaseId::C7Reg), Sub::D)
            | (FamilyId::C(CaseId::C8Sub), Sub::D)
    )
}

/// Whether a parameter is bounded on the Weil-group part given its
/// continuous data; tempered members are the bounded open parameters.
pub fn is_bounded(phi: ParamId, data: &ContinuousData) -> bool {
    let fam = family_info(phi.group, phi.family);
    let od = orbit_data(&fam.phv, phi.orbit());
    let cond = fam.arthur[phi.sub.index()];
    // for the fixed families only the open member is bounded; for the
    // conditional families boundedness coincides with the Arthur condition
    // on the open orbit
    od.is_open && data.arthur_satisfied(cond)
}

#[derive(Clone, Debug)]
pub struct ParamProperties {
    pub open: bool,
    pub closed: bool,
    pub tempered_bounded: bool,
    pub elliptic: bool,
    pub arthur: bool,
    pub dim: u32,
    pub minimal_endoscopic_groups: Vec<GroupId>,
    pub a_phi: FiniteGroup,
    pub a_abv: FiniteGroup,
    pub s_psi: Option<ClassId>,
}

pub fn properties(phi: ParamId, data: &ContinuousData) -> ParamProperties {
    let fam = family_info(phi.group, phi.family);
    let od = orbit_data(&fam.phv, phi.orbit());
    let arthur = data.arthur_satisfied(fam.arthur[phi.sub.index()]);
    ParamProperties {
        open: od.is_open,
        closed: od.is_closed,
        tempered_bounded: is_bounded(phi, data),
        elliptic: is_elliptic(phi),
        arthur,
        dim: od.dim,
        minimal_endoscopic_groups: minimal_endoscopic_groups(phi),
        a_phi: od.a_c,
        a_abv: od.a_abv,
        s_psi: if arthur { s_psi_class(phi) } else { None },
    }
}

// ---------------------------------------------------------------------------
// Duality, normalization properties
// ---------------------------------------------------------------------------

/// The duality pairing on G2 parameters within each family.
pub fn aubert_dual(phi: ParamId) -> ParamId {
    let FamilyId::C(case) = phi.family else {
        panic!("duality pairing is stored for G2 parameters");
    };
    let sub = match case {
        CaseId::C0 => Sub::A,
        CaseId::C1Short | CaseId::C2Long | CaseId::C3 | CaseId::C5 => match phi.sub {
            Sub::A => Sub::B,
            Sub::B => Sub::A,
            _ => unreachable!(),
        },
        _ => match phi.sub {
            Sub::A => Sub::D,
            Sub::B => Sub::C,
            Sub::C => Sub::B,
            Sub::D => Sub::A,
        },
    };
    ParamId::g2(case, sub)
}

/// The involution on representations induced by the Fourier transform
/// through the sheaf bijection (the involutive Fourier variant).
pub fn aubert_dual_repn(pi: Repn) -> Option<Repn> {
    let fam = g2_families()
        .into_iter()
        .find(|f| f.rep_index(pi).is_some())?;
    let sheaf = fam.sheaf_of(pi)?;
    let dual = crate::phv::fourier(&fam.phv, &sheaf);
    fam.rep_of_sheaf(dual)
}

/// Spherical representations: closed parameter, trivial packet character.
pub fn is_spherical(pi: Repn) -> bool {
    g2_families().iter().any(|fam| {
        fam.rep_index(pi).is_some_and(|i| {
            fam.params.iter().enumerate().any(|(col, sub)| {
                fam.llc[i][col] == Some(CharId(0))
                    && orbit_data(&fam.phv, OrbitId(sub.index())).is_closed
            })
        })
    })
}

/// Generic representations: open parameter, trivial packet character.
pub fn is_generic(pi: Repn) -> bool {
    g2_families().iter().any(|fam| {
        fam.rep_index(pi).is_some_and(|i| {
            fam.params.iter().enumerate().any(|(col, sub)| {
                fam.llc[i][col] == Some(CharId(0))
                    && orbit_data(&fam.phv, OrbitId(sub.index())).is_open
            })
        })
    })
}

/// The Langlands parameter of a representation: the unique column of the
/// Langlands table with a nonzero entry in its row.
pub fn param_of_repn(pi: Repn) -> Option<ParamId> {
    for fam in g2_families() {
        if let Some(i) = fam.rep_index(pi) {
            for (col, sub) in fam.params.iter().enumerate() {
                if fam.llc[i][col].is_some() {
                    return Some(ParamId::new(fam.group, fam.family, *sub));
                }
            }
        }
    }
    None
}

/// Unitary unipotent representations of G2, stored independently as data;
/// the verify suite checks this against the Arthur predicate.
pub fn is_unitary(pi: Repn, data: &ContinuousData) -> bool {
    use G2Repn::*;
    let Repn::G2(r) = pi else {
        panic!("unitarity data is stored for G2 representations")
    };
    match r {
        // families with fixed data
        JG2PsTheta2 | JG1StTheta2 | JG2StTheta2 | PiTheta2 | I0MinusOne => true,
        JG2PsTheta3 | PiTheta3 | I0Theta3 | I0Theta3Sq => true,
        JG1StTheta3Sq | JG1StTheta3 => false,
        One | St => true,
        JG1St32 | JG2St52 => false,
        JG2PsOne | JG1StHalf | JG2StHalf | PiOnePrime | PiOne | I0One => true,
        IG1CubicDet | IG1CubicSt | IG2Triv | IG2St => false,
        // conditional families: unitary exactly at the Arthur locus
        PrincipalSeries => data.arthur_satisfied(ArthurCondition::ExponentsZero),
        IG2MuDet | IG2MuSt | IG1MuDet | IG1MuSt => {
            data.arthur_satisfied(ArthurCondition::ExponentHalf)
        }
    }
}
