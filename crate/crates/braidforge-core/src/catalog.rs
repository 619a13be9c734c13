//! Built-in algebras, each under a stable name, some with bundled
//! cocycles. These are the fixtures the command line tool and the test
//! suite share.

use crate::algebra::{
    alexander_biquandle, constant_action_birack, linear_switch, FiniteBirack, LoadedAlgebra,
};
use crate::homology::Cochain2;
use std::sync::OnceLock;

/// A named algebra with optional named cocycles over it.
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub algebra: LoadedAlgebra,
    pub cocycles: Vec<(&'static str, Cochain2)>,
}

fn identity_birack(size: usize) -> FiniteBirack {
    let identity: Vec<crate::algebra::Elem> = (1..=size as crate::algebra::Elem).collect();
    constant_action_birack(&identity, &identity).unwrap()
}

fn sample_biquandle() -> FiniteBirack {
    FiniteBirack::from_rows(
        &[vec![1, 3, 2], vec![3, 2, 1], vec![2, 1, 3]],
        &[vec![1, 1, 1], vec![2, 2, 2], vec![3, 3, 3]],
    )
    .unwrap()
}

fn nonmedial_birack() -> FiniteBirack {
    FiniteBirack::from_rows(
        &[
            vec![1, 1, 1, 1],
            vec![2, 2, 4, 3],
            vec![3, 4, 3, 2],
            vec![4, 3, 2, 4],
        ],
        &[
            vec![1, 1, 1, 1],
            vec![2, 2, 2, 2],
            vec![3, 3, 3, 3],
            vec![4, 4, 4, 4],
        ],
    )
    .unwrap()
}

fn phi5() -> Cochain2 {
    Cochain2::from_rows(&[vec![0, 1, 4], vec![3, 0, 2], vec![1, 2, 0]], 5).unwrap()
}

fn build() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "trivial1",
            description: "one element, both operations the identity",
            algebra: LoadedAlgebra::Birack(identity_birack(1)),
            cocycles: Vec::new(),
        },
        CatalogEntry {
            name: "trivial2",
            description: "two elements, both operations the identity",
            algebra: LoadedAlgebra::Birack(identity_birack(2)),
            cocycles: Vec::new(),
        },
        CatalogEntry {
            name: "trivial3",
            description: "three elements, both operations the identity",
            algebra: LoadedAlgebra::Birack(identity_birack(3)),
            cocycles: Vec::new(),
        },
        CatalogEntry {
            name: "trivial4",
            description: "four elements, both operations the identity",
            algebra: LoadedAlgebra::Birack(identity_birack(4)),
            cocycles: Vec::new(),
        },
        CatalogEntry {
            name: "flip2",
            description: "two elements, both operations swap them",
            algebra: LoadedAlgebra::Birack(
                constant_action_birack(&[2, 1], &[2, 1]).unwrap(),
            ),
            cocycles: Vec::new(),
        },
        CatalogEntry {
            name: "biquandle3",
            description: "three element biquandle with a nontrivial over action",
            algebra: LoadedAlgebra::Birack(sample_biquandle()),
            cocycles: Vec::new(),
        },
        CatalogEntry {
            name: "ca13",
            description: "constant action by the transposition of 1 and 3",
            algebra: LoadedAlgebra::Birack(
                constant_action_birack(&[3, 2, 1], &[3, 2, 1]).unwrap(),
            ),
            cocycles: vec![("phi5", phi5())],
        },
        CatalogEntry {
            name: "nonmedial4",
            description: "four element birack whose switch is not medial",
            algebra: LoadedAlgebra::Birack(nonmedial_birack()),
            cocycles: Vec::new(),
        },
        CatalogEntry {
            name: "alex5",
            description: "Alexander biquandle on Z/5 with s = 2 and t = 3",
            algebra: LoadedAlgebra::Birack(alexander_biquandle(5, 2, 3).unwrap()),
            cocycles: Vec::new(),
        },
        CatalogEntry {
            name: "linear5",
            description: "linear switch on Z/5 with lambda = 2 and mu = 3",
            algebra: LoadedAlgebra::Switch(linear_switch(5, 2, 3).unwrap()),
            cocycles: Vec::new(),
        },
        CatalogEntry {
            name: "linear7",
            description: "linear switch on Z/7 with lambda = 3 and mu = 2",
            algebra: LoadedAlgebra::Switch(linear_switch(7, 3, 2).unwrap()),
            cocycles: Vec::new(),
        },
    ]
}

/// All built-in entries, in listing order.
pub fn entries() -> &'static [CatalogEntry] {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(build)
}

/// Looks an entry up by name.
pub fn find(name: &str) -> Option<&'static CatalogEntry> {
    entries().iter().find(|entry| entry.name == name)
}

impl CatalogEntry {
    pub fn cocycle(&self, name: &str) -> Option<&Cochain2> {
        self.cocycles
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, c)| c)
    }
}
