pub mod canon;
pub mod count;
pub mod error;
pub mod format;
pub mod graph;
pub mod perturb;
pub mod closed_forms;
pub mod families;
pub mod extremal;
pub mod cli;
