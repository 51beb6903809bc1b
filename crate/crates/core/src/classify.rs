//! Entanglement verdicts read off a multirank profile.
//!
//! A pure state is a product across a cut exactly when that flattening has
//! rank 1, and fully product exactly when every single-party flattening
//! has rank 1.

use crate::partition::Bipartition;
use crate::profile::MultirankProfile;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntanglementVerdict {
    pub gme: bool,
    pub fully_product: bool,
    /// Rank-1 cuts, one representative per cut.
    pub product_cuts: Vec<Bipartition>,
    /// Ranks were generic estimates: the verdict holds for parameter values
    /// outside a measure-zero set.
    pub generic: bool,
}

/// Every flattening rank exceeds 1.
pub fn is_gme(profile: &MultirankProfile) -> bool {
    profile.entries().all(|e| e.rank.value > 1)
}

pub fn is_fully_product(profile: &MultirankProfile) -> bool {
    profile
        .level(1)
        .is_some_and(|l| l.iter().all(|e| e.rank.value == 1))
}

pub fn verdict(profile: &MultirankProfile) -> EntanglementVerdict {
    let product_cuts = profile
        .deduplicated()
        .into_iter()
        .flatten()
        .filter(|e| e.rank.value == 1)
        .map(|e| e.bipartition.clone())
        .collect::<Vec<_>>();
    EntanglementVerdict {
        gme: product_cuts.is_empty(),
        fully_product: is_fully_product(profile),
        product_cuts,
        generic: profile.is_generic(),
    }
}

impl EntanglementVerdict {
    /// One-line summary, e.g. `GME` or `not GME; product across I=[1]`.
    pub fn summary(&self) -> String {
        let mut s = if self.gme {
            "GME".to_string()
        } else if self.fully_product {
            "fully product".to_string()
        } else {
            let cuts: Vec<String> = self.product_cuts.iter().map(Bipartition::label).collect();
            format!("not GME; product across {}", cuts.join(", "))
        };
        if self.generic {
            s.push_str(" (generic: holds outside a measure-zero set of parameter values)");
        }
        s
    }
}
