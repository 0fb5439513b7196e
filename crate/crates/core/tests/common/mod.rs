//! Brute-force oracles in plain integer arithmetic, independent of the library.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use qconvex::{FiniteAbelianGroup, GroupElement};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// `4 |r / m| <= 1` for the representative of `r / m` in `(-1/2, 1/2]`.
pub fn in_t_plus(r: u128, m: u128) -> bool {
    let r = r % m;
    4 * r.min(m - r) <= m
}

/// A product of cyclic groups as a plain list of moduli.
#[derive(Clone, Debug)]
pub struct Oracle {
    pub moduli: Vec<u64>,
}

impl Oracle {
    pub fn new(moduli: &[u64]) -> Self {
        Oracle {
            moduli: moduli.to_vec(),
        }
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    pub fn all(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for &m in &self.moduli {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..m).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }

    /// `chi(x)` in `T_+`, with `chi(x) = sum c_i x_i / m_i` reduced to a common denominator.
    pub fn pairing_in_t_plus(&self, chi: &[u64], x: &[u64]) -> bool {
        let l: u128 = self.moduli.iter().map(|&m| m as u128).product();
        let mut acc: u128 = 0;
        for ((&c, &v), &m) in chi.iter().zip(x).zip(&self.moduli) {
            acc = (acc + (c as u128 * v as u128 % m as u128) * (l / m as u128)) % l;
        }
        in_t_plus(acc, l)
    }

    pub fn hull(&self, e: &[Vec<u64>]) -> BTreeSet<Vec<u64>> {
        let all = self.all();
        let polar: Vec<&Vec<u64>> = all
            .iter()
            .filter(|c| e.iter().all(|x| self.pairing_in_t_plus(c, x)))
            .collect();
        all.iter()
            .filter(|y| polar.iter().all(|c| self.pairing_in_t_plus(c, y)))
            .cloned()
            .collect()
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.moduli)
            .map(|((x, y), m)| (x + y) % m)
            .collect()
    }

    pub fn span(&self, gens: &[Vec<u64>]) -> BTreeSet<Vec<u64>> {
        let zero = vec![0; self.moduli.len()];
        let mut seen = BTreeSet::from([zero.clone()]);
        let mut queue = VecDeque::from([zero]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = self.add(&x, g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn element_order(&self, x: &[u64]) -> u64 {
        self.span(&[x.to_vec()]).len() as u64
    }

    pub fn neg(&self, x: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(&self.moduli)
            .map(|(v, m)| (m - v) % m)
            .collect()
    }

    pub fn symmetric(&self, fs: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let mut s = BTreeSet::from([vec![0; self.moduli.len()]]);
        for f in fs {
            s.insert(f.clone());
            s.insert(self.neg(f));
        }
        s.into_iter().collect()
    }

    pub fn independent(&self, fs: &[Vec<u64>]) -> bool {
        fs.iter().all(|f| f.iter().any(|&v| v != 0))
            && self.span(fs).len() as u64
                == fs.iter().map(|f| self.element_order(f)).product::<u64>()
    }

    pub fn random(&self, rng: &mut ChaCha8Rng) -> Vec<u64> {
        self.moduli.iter().map(|&m| rng.gen_range(0..m)).collect()
    }
}

pub fn to_lib(g: &FiniteAbelianGroup, xs: &[Vec<u64>]) -> Vec<GroupElement> {
    xs.iter()
        .map(|x| {
            g.element(&x.iter().map(|&v| v as i64).collect::<Vec<_>>())
                .unwrap()
        })
        .collect()
}

pub fn from_lib(xs: &[GroupElement]) -> BTreeSet<Vec<u64>> {
    xs.iter().map(|x| x.coords().to_vec()).collect()
}

/// Hull of `{0} ∪ {±M/b_n}` in `Z_M`, `M = b_N`, by scanning all `M` characters.
/// Returns the hull and the number of character evaluations.
pub fn truncated_hull(qs: &[u64]) -> (u64, Vec<u64>, Vec<u64>, u128) {
    let m: u64 = qs.iter().product();
    let mut b = 1u64;
    let mut x = BTreeSet::from([0u64]);
    for &q in qs {
        b *= q;
        x.insert(m / b % m);
        x.insert((m - m / b) % m);
    }
    let x: Vec<u64> = x.into_iter().collect();
    let mut evals: u128 = 0;
    let polar: Vec<u64> = (0..m)
        .filter(|&c| {
            evals += x.len() as u128;
            x.iter()
                .all(|&v| in_t_plus(c as u128 * v as u128, m as u128))
        })
        .collect();
    let hull: Vec<u64> = (0..m)
        .filter(|&y| {
            evals += polar.len() as u128;
            polar
                .iter()
                .all(|&c| in_t_plus(c as u128 * y as u128, m as u128))
        })
        .collect();
    (m, x, hull, evals)
}

/// All coefficient vectors along `chain` satisfying the three standardness
/// conditions for `z = j / d_K`, found by depth-first search. Everything is
/// scaled by `D = d_K`, so `z` is the integer `j` and `1/d_i` is `D/d_i`.
pub fn standard_reps(j: i64, chain: &[i64]) -> Vec<Vec<i64>> {
    let d = *chain.last().unwrap();
    let mut out = Vec::new();
    let mut coeffs = Vec::new();
    dfs(j, chain, d, 0, &mut coeffs, &mut out);
    out
}

fn dfs(rem: i64, chain: &[i64], d: i64, k: usize, coeffs: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if k == chain.len() {
        out.push(coeffs.clone());
        return;
    }
    let dk = chain[k];
    let prev = if k == 0 { 1 } else { chain[k - 1] };
    let bound = dk / (2 * prev);
    for c in -bound..=bound {
        let step = c * (d / dk);
        let after = rem - step;
        // (ii): |after| / D <= 1/(2 d_k)
        if 2 * after.abs() * dk > d {
            continue;
        }
        // (iii): on equality, |c/d_k| < |rem|
        if 2 * after.abs() * dk == d && step.abs() >= rem.abs() {
            continue;
        }
        coeffs.push(c);
        dfs(after, chain, d, k + 1, coeffs, out);
        coeffs.pop();
    }
}
