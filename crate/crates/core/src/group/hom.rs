use super::{canonical, FiniteAbelianGroup, GroupElement};
use crate::error::{Error, Result};

/// Homomorphism between products of cyclic groups given by an integer matrix.
///
/// Row `j` gives the `j`-th codomain coordinate as `sum_i matrix[j][i] * x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    domain: FiniteAbelianGroup,
    codomain: FiniteAbelianGroup,
    matrix: Vec<Vec<u64>>,
}

impl Homomorphism {
    /// Fails unless every entry respects the moduli, i.e. `n_j | m_i * a_ji`.
    pub fn new(
        domain: FiniteAbelianGroup,
        codomain: FiniteAbelianGroup,
        matrix: Vec<Vec<i64>>,
    ) -> Result<Self> {
        if matrix.len() != codomain.rank() || matrix.iter().any(|row| row.len() != domain.rank()) {
            return Err(Error::input(format!(
                "matrix shape does not match {} -> {}",
                domain, codomain
            )));
        }
        let mut reduced = Vec::with_capacity(matrix.len());
        for (j, row) in matrix.iter().enumerate() {
            let n = codomain.moduli()[j];
            let mut out = Vec::with_capacity(row.len());
            for (i, &a) in row.iter().enumerate() {
                let a = a.rem_euclid(n as i64) as u64;
                let m = domain.moduli()[i];
                if !(m as u128 * a as u128).is_multiple_of(n as u128) {
                    return Err(Error::input(format!(
                        "entry ({j},{i}) = {a} does not define a homomorphism Z{m} -> Z{n}"
                    )));
                }
                out.push(a);
            }
            reduced.push(out);
        }
        Ok(Homomorphism {
            domain,
            codomain,
            matrix: reduced,
        })
    }

    pub fn identity(g: &FiniteAbelianGroup) -> Self {
        let k = g.rank();
        let matrix = (0..k)
            .map(|j| (0..k).map(|i| i64::from(i == j)).collect())
            .collect();
        Self::new(g.clone(), g.clone(), matrix).expect("identity is a homomorphism")
    }

    pub fn domain(&self) -> &FiniteAbelianGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteAbelianGroup {
        &self.codomain
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement> {
        self.domain.check(x)?;
        let coords = self
            .matrix
            .iter()
            .zip(self.codomain.moduli())
            .map(|(row, &n)| {
                let s: u128 = row
                    .iter()
                    .zip(x.coords())
                    .map(|(&a, &c)| a as u128 * c as u128)
                    .sum();
                (s % n as u128) as u64
            })
            .collect();
        Ok(GroupElement(coords))
    }

    pub fn image(&self, xs: &[GroupElement]) -> Result<Vec<GroupElement>> {
        let ys = xs
            .iter()
            .map(|x| self.apply(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(canonical(&ys))
    }

    /// Whether `f(Q_G(E)) ⊆ Q_H(f(E))`; continuity of homomorphisms makes this always true.
    pub fn hull_image_check(&self, e: &[GroupElement]) -> Result<bool> {
        let lhs = self.image(&self.domain.qc_hull(e)?)?;
        let rhs = self.codomain.qc_hull(&self.image(e)?)?;
        Ok(lhs.iter().all(|y| rhs.binary_search(y).is_ok()))
    }
}
