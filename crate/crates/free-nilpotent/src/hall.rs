//! Hall bases of basic commutators with the left-greater nesting convention,
//! and the Witt numbers counting them per weight.

use serde::{Deserialize, Serialize};

/// Structure of one basic commutator: a generator, or a bracket of two
/// earlier basis entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CommutatorTree {
    Gen(usize),
    /// [left, right] with left > right in the Hall order; if left = [u,v]
    /// then v <= right.
    Pair(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicCommutator {
    pub weight: usize,
    pub tree: CommutatorTree,
}

/// Hall basis of the free class-`class` nilpotent group of rank `rank`:
/// basic commutators in collection order (by weight, then by (left, right)).
#[derive(Clone, Debug)]
pub struct HallBasis {
    pub rank: usize,
    pub class: usize,
    pub items: Vec<BasicCommutator>,
}

/// Witt number: dimension of the degree-n component of the free Lie ring of
/// rank r, (1/n) * sum_{d|n} mu(d) r^{n/d}.
pub fn witt_number(r: u64, n: u64) -> u64 {
    assert!(n >= 1);
    let mut total: i128 = 0;
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let m = moebius(d);
        if m != 0 {
            total += m as i128 * (r as i128).pow((n / d) as u32);
        }
    }
    assert!(total >= 0 && total % n as i128 == 0);
    (total / n as i128) as u64
}

fn moebius(n: u64) -> i64 {
    let mut n = n;
    let mut k = 0;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            k += 1;
        }
        d += 1;
    }
    if n > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

impl HallBasis {
    pub fn new(rank: usize, class: usize) -> Self {
        assert!(rank >= 1 && class >= 1);
        let mut items: Vec<BasicCommutator> = (0..rank)
            .map(|i| BasicCommutator {
                weight: 1,
                tree: CommutatorTree::Gen(i),
            })
            .collect();
        for w in 2..=class {
            let upto = items.len();
            let mut fresh = Vec::new();
            for u in 0..upto {
                for v in 0..upto {
                    if items[u].weight + items[v].weight != w || u <= v {
                        continue;
                    }
                    if let CommutatorTree::Pair(_, u2) = items[u].tree {
                        if u2 > v {
                            continue;
                        }
                    }
                    fresh.push((u, v));
                }
            }
            fresh.sort_unstable();
            for (u, v) in fresh {
                items.push(BasicCommutator {
                    weight: w,
                    tree: CommutatorTree::Pair(u, v),
                });
            }
        }
        let basis = HallBasis { rank, class, items };
        for (w, &count) in basis.counts_by_weight().iter().enumerate() {
            debug_assert_eq!(
                count as u64,
                witt_number(rank as u64, (w + 1) as u64),
                "weight {} count disagrees with the Witt number",
                w + 1
            );
        }
        basis
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn weight(&self, idx: usize) -> usize {
        self.items[idx].weight
    }

    /// Entry counts per weight 1..=class.
    pub fn counts_by_weight(&self) -> Vec<usize> {
        let mut counts = vec![0; self.class];
        for item in &self.items {
            counts[item.weight - 1] += 1;
        }
        counts
    }

    /// Positions of the weight-w entries (contiguous by construction).
    pub fn positions_of_weight(&self, w: usize) -> std::ops::Range<usize> {
        let start = self.items.iter().position(|b| b.weight == w);
        match start {
            None => 0..0,
            Some(s) => {
                let e = self
                    .items
                    .iter()
                    .rposition(|b| b.weight == w)
                    .expect("nonempty");
                s..e + 1
            }
        }
    }

    pub fn generator_name(&self, i: usize) -> String {
        const NAMES: [&str; 4] = ["x", "y", "z", "w"];
        if self.rank <= 4 {
            NAMES[i].to_string()
        } else {
            format!("x{}", i + 1)
        }
    }

    /// Nested bracket rendering, e.g. "[[y,x],y]".
    pub fn bracket_string(&self, idx: usize) -> String {
        match self.items[idx].tree {
            CommutatorTree::Gen(i) => self.generator_name(i),
            CommutatorTree::Pair(u, v) => {
                format!("[{},{}]", self.bracket_string(u), self.bracket_string(v))
            }
        }
    }

    /// Finds the basis entry equal to the left-normed commutator of the given
    /// generator sequence, e.g. [y,x,x] for gens [1,0,0].
    pub fn left_normed_position(&self, gens: &[usize]) -> Option<usize> {
        let mut cur = self.items.iter().position(|b| b.tree == CommutatorTree::Gen(gens[0]))?;
        for &g in &gens[1..] {
            let right = self
                .items
                .iter()
                .position(|b| b.tree == CommutatorTree::Gen(g))?;
            cur = self
                .items
                .iter()
                .position(|b| b.tree == CommutatorTree::Pair(cur, right))?;
        }
        Some(cur)
    }
}
