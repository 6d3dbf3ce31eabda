//! Command dispatch (placeholder while the surface is under construction).

pub fn run() -> i32 {
    2
}
