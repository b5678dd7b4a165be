pub mod arquiver;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod quiver;
pub mod triangulation;
pub mod verify;
