//! Deliberate faults in the core, used to show that the verification suites
//! can actually fail.
//!
//! The active mutation is process global. Only the mutation tests touch it, and
//! they run their work inside [`with_mutation`], which restores the previous
//! state on exit. Memo caches key on [`epoch`] so no stale products survive a
//! switch.

use std::sync::atomic::{AtomicU64, AtomicU8, Ordering};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// `[L_m, L_n] = (m+n) L_{m+n}` instead of `(m-n) L_{m+n}`.
    BracketSignFlip,
    /// The `t^2` coefficient of the twist element `D_b` is dropped.
    DropTwistT2,
    /// PBW straightening swaps adjacent generators without adding the bracket.
    WrongSwap,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [
        Mutation::BracketSignFlip,
        Mutation::DropTwistT2,
        Mutation::WrongSwap,
    ];

    fn code(self) -> u8 {
        match self {
            Mutation::BracketSignFlip => 1,
            Mutation::DropTwistT2 => 2,
            Mutation::WrongSwap => 3,
        }
    }

    fn from_code(code: u8) -> Option<Self> {
        match code {
            1 => Some(Mutation::BracketSignFlip),
            2 => Some(Mutation::DropTwistT2),
            3 => Some(Mutation::WrongSwap),
            _ => None,
        }
    }
}

static ACTIVE: AtomicU8 = AtomicU8::new(0);
static EPOCH: AtomicU64 = AtomicU64::new(0);

pub fn active() -> Option<Mutation> {
    Mutation::from_code(ACTIVE.load(Ordering::Relaxed))
}

pub fn is_active(m: Mutation) -> bool {
    ACTIVE.load(Ordering::Relaxed) == m.code()
}

pub fn epoch() -> u64 {
    EPOCH.load(Ordering::Acquire)
}

fn set(m: Option<Mutation>) {
    ACTIVE.store(m.map_or(0, Mutation::code), Ordering::Release);
    EPOCH.fetch_add(1, Ordering::AcqRel);
}

/// Runs `f` with `m` active.
pub fn with_mutation<T>(m: Mutation, f: impl FnOnce() -> T) -> T {
    struct Restore(Option<Mutation>);
    impl Drop for Restore {
        fn drop(&mut self) {
            set(self.0);
        }
    }
    let _restore = Restore(active());
    set(Some(m));
    f()
}
