//! Exact-arithmetic classification of unipotent representations of
//! p-adic G2: parameter classification, ABV-packets and their
//! coefficients, distribution identities, fixed-point trace formulas and
//! endoscopic lifting, all over the 12th cyclotomic field with a formal q.

pub mod exactnum;
pub mod infclass;
pub mod packets;
pub mod phv;
pub mod rootdata;
pub mod subphv;
