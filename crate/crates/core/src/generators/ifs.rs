use alloc::vec::Vec;

use super::FamilySpec;
use crate::error::{Error, Result};
use crate::numerics::{ClosedInterval, IntervalSet, Rational};

/// `x -> scale * x + shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub scale: Rational,
    pub shift: Rational,
}

impl AffineMap {
    pub fn new(scale: Rational, shift: Rational) -> Self {
        AffineMap { scale, shift }
    }

    pub fn apply(&self, x: &Rational) -> Rational {
        &self.scale * x + &self.shift
    }
}

/// Contractions whose images of `[0, 1]` are pairwise disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IfsMaps {
    maps: Vec<AffineMap>,
}

impl IfsMaps {
    pub fn new(mut maps: Vec<AffineMap>) -> Result<Self> {
        let one = Rational::one();
        if maps.iter().any(|m| !m.scale.is_positive() || m.scale >= one) {
            return Err(Error::InvalidMap);
        }
        maps.sort_by(|x, y| x.shift.cmp(&y.shift));
        let disjoint = maps.windows(2).all(|w| &w[0].shift + &w[0].scale < w[1].shift);
        if !disjoint {
            return Err(Error::OverlappingImages);
        }
        Ok(IfsMaps { maps })
    }

    /// `x/3` and `x/3 + 2/3`.
    pub fn ternary() -> Self {
        IfsMaps {
            maps: alloc::vec![
                AffineMap::new(Rational::new(1, 3), Rational::zero()),
                AffineMap::new(Rational::new(1, 3), Rational::new(2, 3)),
            ],
        }
    }

    /// The self-similar maps of a proportional or digit family. Power and
    /// lambda stages are not self-similar and have none; a digit family with
    /// adjacent kept digits has touching images and is rejected.
    pub fn for_family(family: &FamilySpec) -> Result<Self> {
        family.validate()?;
        match family {
            FamilySpec::Proportional { alpha } => {
                let c = (Rational::one() - alpha) / Rational::from_integer(2);
                let right = Rational::one() - &c;
                IfsMaps::new(alloc::vec![
                    AffineMap::new(c.clone(), Rational::zero()),
                    AffineMap::new(c, right),
                ])
            }
            FamilySpec::DigitSet { n, digits } => {
                let h = Rational::new(1, i64::from(*n));
                IfsMaps::new(
                    digits
                        .iter()
                        .map(|&d| AffineMap::new(h.clone(), &h * Rational::from_integer(i64::from(d))))
                        .collect(),
                )
            }
            _ => Err(Error::InvalidArgument("family is not self-similar")),
        }
    }

    pub fn maps(&self) -> &[AffineMap] {
        &self.maps
    }
}

/// Union of the images of `set` under every map. The images must not meet.
pub fn ifs_step(set: &IntervalSet, maps: &IfsMaps) -> Result<IntervalSet> {
    let mut images: Vec<ClosedInterval> = Vec::with_capacity(set.len() * maps.maps.len());
    for m in &maps.maps {
        images.extend(
            set.iter()
                .map(|iv| ClosedInterval::new_unchecked(m.apply(iv.a()), m.apply(iv.b()))),
        );
    }
    images.sort_by(|x, y| x.a().cmp(y.a()));
    if images.windows(2).any(|w| w[0].b() >= w[1].a()) {
        return Err(Error::OverlappingImages);
    }
    Ok(IntervalSet::normalize(images))
}
