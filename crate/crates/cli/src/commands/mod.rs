pub mod curve;
pub mod density;
pub mod efficiency;
pub mod select;
pub mod simulate;
