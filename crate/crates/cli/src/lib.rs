//! Support modules for the `khazamula` command-line tool.

pub mod arclist;
pub mod output;
