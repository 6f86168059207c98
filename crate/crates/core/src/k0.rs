//! Grothendieck group ranks, the tilting verdict and the classification
//! report for hereditary noetherian categories.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::p1::{HomExtTable, SheafOrderJson, SheafOrderSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct K0Result {
    pub rank: usize,
    pub fg: bool,
    pub free: bool,
    pub decomposition: String,
}

/// `K_0` of a sheaf of hereditary orders on `P^1`: `K_0(O_X) ⊕ Z^r` with
/// `r = Σ (e_i - 1)`, free of rank `2 + r`.
pub fn k0_rank(s: &SheafOrderSpec) -> K0Result {
    let r: usize = s.e().iter().map(|e| e - 1).sum();
    K0Result {
        rank: 2 + r,
        fg: true,
        free: true,
        decomposition: format!("K0(O_P1) ⊕ Z^{r} = Z^{}", 2 + r),
    }
}

/// Same as [`k0_rank`] for a curve of the given genus; only genus 0 has a
/// finitely generated group.
pub fn k0_rank_genus(s: &SheafOrderSpec, genus: u32) -> Result<K0Result> {
    if genus > 0 {
        return Err(Error::Genus(genus));
    }
    Ok(k0_rank(s))
}

/// Which tilting condition failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TiltingCondition {
    /// Some Ext¹ between summands is nonzero.
    ExtVanishing,
    /// Not a strongly exceptional sequence in the given order.
    Exceptional,
    /// Number of summands differs from the rank of `K_0`.
    Count,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiltingVerdict {
    pub tilting: bool,
    pub summands: usize,
    pub rank: usize,
    pub failed: Option<TiltingCondition>,
    pub reason: Option<String>,
}

/// Checks (a) all Ext¹ vanish, (b) endomorphisms are one-dimensional and
/// `Hom(T_a, T_b) = 0` for `b > a`, (c) the summand count equals the rank
/// of `K_0`. The first failing condition is reported.
pub fn verify_tilting(table: &HomExtTable, s: &SheafOrderSpec) -> TiltingVerdict {
    let rank = k0_rank(s).rank;
    let n = table.len();
    let labels = table.summands();
    let fail = |c: TiltingCondition, reason: String| TiltingVerdict {
        tilting: false,
        summands: n,
        rank,
        failed: Some(c),
        reason: Some(reason),
    };
    for a in 0..n {
        for b in 0..n {
            let x = table.ext1(a, b);
            if x != 0 {
                return fail(
                    TiltingCondition::ExtVanishing,
                    format!("Ext1({}, {}) = {x}", labels[a], labels[b]),
                );
            }
        }
    }
    for a in 0..n {
        if table.hom(a, a) != 1 {
            return fail(
                TiltingCondition::Exceptional,
                format!("End({}) has dimension {}", labels[a], table.hom(a, a)),
            );
        }
        for b in a + 1..n {
            if table.hom(a, b) != 0 {
                return fail(
                    TiltingCondition::Exceptional,
                    format!(
                        "Hom({}, {}) = {} against the order",
                        labels[a],
                        labels[b],
                        table.hom(a, b)
                    ),
                );
            }
        }
    }
    if n != rank {
        return fail(TiltingCondition::Count, format!("count {n} ≠ rank {rank}"));
    }
    TiltingVerdict {
        tilting: true,
        summands: n,
        rank,
        failed: None,
        reason: None,
    }
}

/// A hereditary noetherian category to classify.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CategoryDescriptor {
    /// Finitely generated modules over a finite-dimensional hereditary
    /// algebra; `vertices` is the number of simples when known.
    HereditaryAlgebra {
        #[serde(default)]
        vertices: Option<usize>,
    },
    /// Finite-dimensional nilpotent representations of the cyclic quiver
    /// with `n + 1` vertices.
    CyclicQuiver { n: usize },
    /// Coherent modules over a sheaf of hereditary orders on a smooth
    /// projective curve of the given genus.
    SheafOrder {
        spec: SheafOrderJson,
        #[serde(default)]
        genus: u32,
    },
    /// A finite-length category with infinitely many simple objects.
    FiniteLengthInfiniteSimples,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassificationCase {
    /// Sheaf of hereditary orders on a curve.
    #[serde(rename = "i")]
    SheafOrder,
    /// Modules over a hereditary algebra.
    #[serde(rename = "ii")]
    HereditaryAlgebra,
    /// Nilpotent representations of a cyclic quiver.
    #[serde(rename = "iii")]
    CyclicQuiver,
    /// Derived equivalent to one of the above.
    #[serde(rename = "iv")]
    DerivedEquivalent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub fg: bool,
    pub rank: Option<usize>,
    pub tilting: bool,
    pub case: Option<ClassificationCase>,
    pub citations: Vec<String>,
    pub notes: Vec<String>,
}

/// Total, deterministic classification of a descriptor.
pub fn classify(c: &CategoryDescriptor) -> Result<ClassificationReport> {
    Ok(match c {
        CategoryDescriptor::HereditaryAlgebra { vertices } => ClassificationReport {
            fg: true,
            rank: *vertices,
            tilting: true,
            case: Some(ClassificationCase::HereditaryAlgebra),
            citations: vec![
                "K0 is free on the classes of the simple modules".into(),
                "the regular module is a tilting object".into(),
            ],
            notes: if vertices.is_none() {
                vec!["rank unspecified: number of simples not supplied".into()]
            } else {
                Vec::new()
            },
        },
        CategoryDescriptor::CyclicQuiver { n } => {
            if *n == 0 {
                return Err(Error::Spec("cyclic quiver needs n >= 1".into()));
            }
            ClassificationReport {
                fg: true,
                rank: Some(n + 1),
                tilting: false,
                case: Some(ClassificationCase::CyclicQuiver),
                citations: vec![
                    "finite length with finitely many simples, so K0 is free on the simples".into(),
                    "every object has finite length, so there is no tilting object".into(),
                ],
                notes: Vec::new(),
            }
        }
        CategoryDescriptor::SheafOrder { spec, genus } => {
            let spec = SheafOrderSpec::from_json(spec)?;
            if *genus > 0 {
                ClassificationReport {
                    fg: false,
                    rank: None,
                    tilting: false,
                    case: Some(ClassificationCase::SheafOrder),
                    citations: vec![format!(
                        "genus {genus}: K0 surjects onto the rational points of the Jacobian, which are not finitely generated"
                    )],
                    notes: Vec::new(),
                }
            } else {
                let k = k0_rank(&spec);
                ClassificationReport {
                    fg: true,
                    rank: Some(k.rank),
                    tilting: true,
                    case: Some(ClassificationCase::SheafOrder),
                    citations: vec![
                        "K0(O) = K0(O_P1) ⊕ Z^r with r = Σ(e_i - 1)".into(),
                        "the arm simples with E and E(-1) form a tilting object".into(),
                    ],
                    notes: vec!["derived equivalent to a canonical algebra; not modelled".into()],
                }
            }
        }
        CategoryDescriptor::FiniteLengthInfiniteSimples => ClassificationReport {
            fg: false,
            rank: None,
            tilting: false,
            case: None,
            citations: vec!["infinitely many simple objects give independent classes in K0".into()],
            notes: Vec::new(),
        },
    })
}
