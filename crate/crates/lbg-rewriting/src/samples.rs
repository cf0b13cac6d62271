use crate::system::RewritingSystem;

/// Binary counter: `a` appends 0, `b` increments without overflow, `c`
/// removes a trailing 1. Normal forms are the words over {0,1}.
pub fn counter_system() -> RewritingSystem {
    RewritingSystem::from_texts(
        "a b c 0 1",
        "a b c",
        &["a -> 0", "b -> b", "0b -> 1", "1b -> b0", "c -> c", "1c -> ε"],
    )
    .expect("counter system is well formed")
}
