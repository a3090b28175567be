pub mod exact;
pub mod numfield;
pub mod residue;
pub mod algebra;
pub mod factorset;
pub mod brauer;
pub mod twisted;
pub mod certify;
pub mod bundle;
pub mod replay;
pub mod report;
