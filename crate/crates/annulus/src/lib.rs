pub mod algebra;
pub mod data;
pub mod diagram;
pub mod invariants;
pub mod obstructions;
pub mod par;
