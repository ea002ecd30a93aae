/// CLI entry; filled in with the batch front end.
pub fn main_entry() -> i32 { 0 }
