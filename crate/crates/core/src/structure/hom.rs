use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::enumerate::Enumeration;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::limits;
use crate::perm::Perm;

/// A homomorphism of permutation groups given by generator images.
///
/// Construction walks the Cayley graph of the domain and checks every edge
/// `x -> x*g` against the image `f(x)*f(g)`, so a successfully built value
/// is a homomorphism on the whole domain.
#[derive(Clone)]
pub struct Homomorphism {
    domain: PermGroup,
    image: PermGroup,
    generator_images: Vec<Perm>,
    domain_enum: Arc<Enumeration>,
    image_enum: Arc<Enumeration>,
    /// Image index of each domain element, aligned with the domain enumeration.
    images: Arc<Vec<u32>>,
}

impl Homomorphism {
    pub fn from_generator_images(
        domain: &PermGroup,
        image_degree: usize,
        generator_images: Vec<Perm>,
    ) -> Result<Self> {
        if generator_images.len() != domain.generators().len() {
            return Err(Error::NotAHomomorphism("one image per generator is required".into()));
        }
        let image = PermGroup::new(image_degree, generator_images.clone())?;
        if domain.order() % image.order() != 0 {
            return Err(Error::NotAHomomorphism(format!(
                "image order {} does not divide {}",
                image.order(),
                domain.order()
            )));
        }
        let de = domain.enumeration()?;
        let ie = image.enumeration()?;
        let pairs: Vec<(u32, u32)> = domain
            .generators()
            .iter()
            .zip(&generator_images)
            .map(|(g, h)| {
                (
                    de.index_of(g).expect("generator is an element"),
                    ie.index_of(h).expect("image generator is an element"),
                )
            })
            .collect();
        let mut images = vec![u32::MAX; de.len()];
        images[de.identity() as usize] = ie.identity();
        let mut queue = vec![de.identity()];
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k];
            let fx = images[x as usize];
            for &(g, h) in &pairs {
                let y = de.mul(x, g);
                let fy = ie.mul(fx, h);
                match images[y as usize] {
                    u32::MAX => {
                        images[y as usize] = fy;
                        queue.push(y);
                    }
                    v if v != fy => {
                        return Err(Error::NotAHomomorphism(format!(
                            "{} has two images",
                            de.element(y)
                        )))
                    }
                    _ => {}
                }
            }
            k += 1;
        }
        Ok(Homomorphism {
            domain: domain.clone(),
            image,
            generator_images,
            domain_enum: de,
            image_enum: ie,
            images: Arc::new(images),
        })
    }

    pub fn domain(&self) -> &PermGroup {
        &self.domain
    }

    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn generator_images(&self) -> &[Perm] {
        &self.generator_images
    }

    pub fn apply(&self, x: &Perm) -> Result<Perm> {
        let i = self
            .domain_enum
            .index_of(x)
            .ok_or_else(|| Error::NotInGroup(x.to_string()))?;
        Ok(self.image_enum.element(self.images[i as usize]).clone())
    }

    pub fn kernel(&self) -> PermGroup {
        let id = self.image_enum.identity();
        let mut bits = FixedBitSet::with_capacity(self.domain_enum.len());
        for (x, &fx) in self.images.iter().enumerate() {
            if fx == id {
                bits.insert(x);
            }
        }
        let k = self.domain_enum.closed_elem_set(&bits);
        self.domain.group_of(&self.domain_enum, &k)
    }

    /// `{x : f(x) in s}` for a subgroup `s` of the image.
    pub fn preimage(&self, s: &PermGroup) -> Result<PermGroup> {
        let ss = self.image.set_of(&self.image_enum, s)?;
        let mut bits = FixedBitSet::with_capacity(self.domain_enum.len());
        for (x, &fx) in self.images.iter().enumerate() {
            if ss.contains(fx) {
                bits.insert(x);
            }
        }
        let k = self.domain_enum.closed_elem_set(&bits);
        Ok(self.domain.group_of(&self.domain_enum, &k))
    }
}

/// The action of `g` on the right cosets of `h` (`Hx . y = Hxy`), with
/// cosets numbered in order of their smallest element.
pub fn coset_action(g: &PermGroup, h: &PermGroup) -> Result<Homomorphism> {
    let e = g.enumeration()?;
    let hs = g.set_of(&e, h)?;
    let index = e.len() / hs.order();
    if index as u64 > limits::degree_cutoff() {
        return Err(Error::CutoffExceeded {
            what: "degree",
            order: index as u64,
            cutoff: limits::degree_cutoff(),
        });
    }
    let mut coset = vec![u32::MAX; e.len()];
    let mut reps = Vec::with_capacity(index);
    for x in 0..e.len() as u32 {
        if coset[x as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        for &y in &hs.elems {
            coset[e.mul(y, x) as usize] = id;
        }
        reps.push(x);
    }
    let images = g
        .generators()
        .iter()
        .map(|s| {
            let si = e.index_of(s).expect("generator is an element");
            Perm::from_images(reps.iter().map(|&r| coset[e.mul(r, si) as usize] as usize))
        })
        .collect::<Result<Vec<_>>>()?;
    Homomorphism::from_generator_images(g, index, images)
}

/// `G -> G/N` as the action on cosets of `N`.
pub fn quotient(g: &PermGroup, n: &PermGroup) -> Result<Homomorphism> {
    if !g.contains_group(n) {
        return Err(Error::NotInGroup("normal subgroup candidate".into()));
    }
    if !g.is_normal(n) {
        return Err(Error::NotNormal);
    }
    let h = coset_action(g, n)?;
    debug_assert_eq!(h.kernel().order(), n.order());
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;

    #[test]
    fn sym4_mod_klein() {
        let s4 = symmetric(4).unwrap();
        let v4 = PermGroup::from_cycles(4, &["(1,2)(3,4)", "(1,3)(2,4)"]).unwrap();
        let h = quotient(&s4, &v4).unwrap();
        assert_eq!(h.image().order(), 6);
        assert!(!h.image().is_abelian());
        assert!(h.kernel().same_as(&v4));
        assert_eq!(h.domain().order(), h.kernel().order() * h.image().order());
    }

    #[test]
    fn quotient_requires_normality() {
        let s4 = symmetric(4).unwrap();
        let c2 = PermGroup::from_cycles(4, &["(1,2)"]).unwrap();
        assert!(matches!(quotient(&s4, &c2), Err(Error::NotNormal)));
    }

    #[test]
    fn coset_action_kernel_is_core() {
        let a5 = alternating(5).unwrap();
        let a4 = PermGroup::from_cycles(5, &["(1,2,3)", "(2,3,4)"]).unwrap();
        let h = coset_action(&a5, &a4).unwrap();
        assert_eq!(h.image().degree(), 5);
        assert!(h.kernel().is_trivial());
    }

    #[test]
    fn rejects_non_homomorphism() {
        let c4 = cyclic(4).unwrap();
        let bad = Perm::parse("(1,2,3)", 3).unwrap();
        assert!(Homomorphism::from_generator_images(&c4, 3, vec![bad]).is_err());
        let s3 = symmetric(3).unwrap();
        // (1,2) -> (1,2), (1,2,3) -> (1,2): not a homomorphism
        let t = Perm::parse("(1,2)", 2).unwrap();
        assert!(Homomorphism::from_generator_images(&s3, 2, vec![t.clone(), t]).is_err());
    }

    #[test]
    fn preimage_of_subgroup() {
        let s4 = symmetric(4).unwrap();
        let v4 = PermGroup::from_cycles(4, &["(1,2)(3,4)", "(1,3)(2,4)"]).unwrap();
        let h = quotient(&s4, &v4).unwrap();
        let c3 = h.image().derived_subgroup();
        assert_eq!(h.preimage(&c3).unwrap().order(), 12);
    }
}
