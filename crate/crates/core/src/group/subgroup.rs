use std::collections::HashMap;

use super::{canonical, Character, FiniteAbelianGroup, GroupElement};
use crate::error::{Error, Result};

/// Subgroup `H = <g_1, ..., g_r>` of a finite group, carrying its own presentation.
///
/// `H` is presented as the quotient of the cover `C = Z_{o(g_1)} x ... x Z_{o(g_r)}`
/// by the kernel of `c -> sum c_i g_i`. Characters of `H` are the characters of
/// `C` vanishing on that kernel, so hulls computed here never consult the
/// ambient group's dual.
#[derive(Clone, Debug)]
pub struct Subgroup {
    ambient: FiniteAbelianGroup,
    gens: Vec<GroupElement>,
    cover: FiniteAbelianGroup,
    dual: Vec<Character>,
    /// Ambient elements of `H` mapped to one preimage in the cover.
    lifts: HashMap<GroupElement, GroupElement>,
}

impl Subgroup {
    pub fn generated(ambient: &FiniteAbelianGroup, gens: &[GroupElement]) -> Result<Self> {
        for g in gens {
            ambient.check(g)?;
        }
        let gens: Vec<GroupElement> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let cover =
            FiniteAbelianGroup::new(gens.iter().map(|g| ambient.element_order(g)).collect())?;

        let mut lifts = HashMap::new();
        let mut kernel = Vec::new();
        for c in cover.elements() {
            let x = Self::project(ambient, &gens, &c);
            if x.is_zero() {
                kernel.push(c.clone());
            }
            lifts.entry(x).or_insert(c);
        }
        // Characters trivial on the kernel all lie in its polar; scan that first.
        let dual = cover
            .polar(&kernel)?
            .into_iter()
            .filter(|chi| {
                kernel
                    .iter()
                    .all(|k| cover.eval(chi, k).map(|v| v.is_zero()).unwrap_or(false))
            })
            .collect();
        Ok(Subgroup {
            ambient: ambient.clone(),
            gens,
            cover,
            dual,
            lifts,
        })
    }

    /// The factor subgroup on the given coordinates.
    pub fn direct_factor(ambient: &FiniteAbelianGroup, coords: &[usize]) -> Result<Self> {
        if let Some(&i) = coords.iter().find(|&&i| i >= ambient.rank()) {
            return Err(Error::input(format!(
                "coordinate {i} out of range for {ambient}"
            )));
        }
        let gens: Vec<GroupElement> = coords.iter().map(|&i| ambient.unit(i)).collect();
        Self::generated(ambient, &gens)
    }

    fn project(
        ambient: &FiniteAbelianGroup,
        gens: &[GroupElement],
        c: &GroupElement,
    ) -> GroupElement {
        gens.iter()
            .zip(c.coords())
            .fold(ambient.zero(), |acc, (g, &k)| {
                ambient.add(&acc, &ambient.scale(k as i64, g))
            })
    }

    pub fn ambient(&self) -> &FiniteAbelianGroup {
        &self.ambient
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.lifts.len()
    }

    /// Number of characters of `H`; equals `|H|` by duality.
    pub fn dual_order(&self) -> usize {
        self.dual.len()
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        self.lifts.contains_key(x)
    }

    /// Members of `H` in canonical ambient order.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut v: Vec<GroupElement> = self.lifts.keys().cloned().collect();
        v.sort();
        v
    }

    /// Quasi-convex hull of `s ⊆ H` computed inside `H`.
    pub fn qc_hull(&self, s: &[GroupElement]) -> Result<Vec<GroupElement>> {
        let lifted = s
            .iter()
            .map(|x| {
                self.lifts
                    .get(x)
                    .cloned()
                    .ok_or_else(|| Error::input(format!("{x} is not in the subgroup")))
            })
            .collect::<Result<Vec<_>>>()?;
        let polar: Vec<Character> = self
            .dual
            .iter()
            .filter(|chi| {
                lifted.iter().all(|c| {
                    self.cover
                        .eval(chi, c)
                        .map(|v| v.in_t_plus())
                        .unwrap_or(false)
                })
            })
            .cloned()
            .collect();
        let pre = self.cover.prepolar(&polar)?;
        let image: Vec<GroupElement> = pre
            .iter()
            .map(|c| Self::project(&self.ambient, &self.gens, c))
            .collect();
        Ok(canonical(&image))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_subgroup_of_z8() {
        let z8: FiniteAbelianGroup = "Z8".parse().unwrap();
        let h = Subgroup::generated(&z8, &[z8.element(&[2]).unwrap()]).unwrap();
        assert_eq!(h.order(), 4);
        assert_eq!(h.dual_order(), 4);
        assert!(h.contains(&z8.element(&[6]).unwrap()));
        assert!(!h.contains(&z8.element(&[3]).unwrap()));
        // {0, ±2} in H ≅ Z4 is the Z4 set {0, ±1}, which is quasi-convex.
        let s = z8.parse_set("0,2,6").unwrap();
        assert_eq!(h.qc_hull(&s).unwrap(), s);
        assert_eq!(z8.qc_hull(&s).unwrap(), s);
    }

    #[test]
    fn redundant_generators() {
        let z44: FiniteAbelianGroup = "Z4 x Z4".parse().unwrap();
        let gens = z44.parse_set("(1,0),(2,0),(0,2)").unwrap();
        let h = Subgroup::generated(&z44, &gens).unwrap();
        assert_eq!(h.order(), 8);
        assert_eq!(h.dual_order(), 8);
        let s = z44.parse_set("(0,0),(1,0),(3,0)").unwrap();
        let inside = h.qc_hull(&s).unwrap();
        let outside = z44.qc_hull(&s).unwrap();
        assert_eq!(inside, outside);
    }

    #[test]
    fn direct_factor_and_errors() {
        let grp: FiniteAbelianGroup = "Z4 x Z5".parse().unwrap();
        let h = Subgroup::direct_factor(&grp, &[1]).unwrap();
        assert_eq!(h.order(), 5);
        assert!(h.qc_hull(&[grp.element(&[1, 0]).unwrap()]).is_err());
        assert!(Subgroup::direct_factor(&grp, &[2]).is_err());
        let trivial = Subgroup::generated(&grp, &[]).unwrap();
        assert_eq!(trivial.qc_hull(&[]).unwrap(), vec![grp.zero()]);
    }
}
