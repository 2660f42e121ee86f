pub mod error;
pub mod numeric;
pub mod reducer;
pub mod series;
pub mod special;
pub mod suite;
pub mod verify;

pub use error::{Error, Result};
