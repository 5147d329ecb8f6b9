pub mod bcalg;
pub mod error;
pub mod exact;
pub mod geodef;
pub mod json;
pub mod qsm;
pub mod qwitt;
pub mod witt;
pub mod zetageo;

pub use error::{Error, Result};
