//! The fixed symbol registry.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Number of registered symbols; monomial exponent arrays have this length.
pub const NSYM: usize = 16;

const NAMES: [&str; NSYM] = [
    "a1", "a2", "a3", "a4", "xi", "mu", "upsilon", "t1", "t2", "h1", "h2", "z1", "z2", "i", "j",
    "k",
];

/// A named indeterminate from the fixed registry. Equality and ordering
/// are by registry index, which follows the declaration order above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Symbol(u8);

impl Symbol {
    pub const A1: Symbol = Symbol(0);
    pub const A2: Symbol = Symbol(1);
    pub const A3: Symbol = Symbol(2);
    pub const A4: Symbol = Symbol(3);
    pub const XI: Symbol = Symbol(4);
    pub const MU: Symbol = Symbol(5);
    pub const UPSILON: Symbol = Symbol(6);
    pub const T1: Symbol = Symbol(7);
    pub const T2: Symbol = Symbol(8);
    pub const H1: Symbol = Symbol(9);
    pub const H2: Symbol = Symbol(10);
    pub const Z1: Symbol = Symbol(11);
    pub const Z2: Symbol = Symbol(12);
    pub const I: Symbol = Symbol(13);
    pub const J: Symbol = Symbol(14);
    pub const K: Symbol = Symbol(15);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(idx: usize) -> Symbol {
        assert!(idx < NSYM, "symbol index out of registry");
        Symbol(idx as u8)
    }

    pub fn name(self) -> &'static str {
        NAMES[self.index()]
    }

    pub fn by_name(name: &str) -> Option<Symbol> {
        NAMES
            .iter()
            .position(|n| *n == name)
            .map(|i| Symbol(i as u8))
    }

    pub fn all() -> impl Iterator<Item = Symbol> {
        (0..NSYM).map(|i| Symbol(i as u8))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve_to_themselves() {
        for s in Symbol::all() {
            assert_eq!(Symbol::by_name(s.name()), Some(s));
        }
        assert_eq!(Symbol::by_name("nope"), None);
    }
}
