use crate::error::Result;
use crate::generators::{level_stats, FamilySpec};
use crate::numerics::Rational;

/// Exact total length of stage `k`, from the count/length recurrence.
pub fn measure_at_depth(family: &FamilySpec, k: u32) -> Result<Rational> {
    Ok(level_stats(family, k)?.total_length())
}

/// Lebesgue measure of the limit set, in closed form.
///
/// The power family removes `2^(k-1)` intervals of length `1/n^k` at stage
/// `k`, a total of `1/(n-2)`, leaving `(n-3)/(n-2)`. Base 2 collapses to four
/// points after two stages.
pub fn limit_measure(family: &FamilySpec) -> Result<Rational> {
    family.validate()?;
    Ok(match family {
        FamilySpec::Proportional { .. } | FamilySpec::DigitSet { .. } => Rational::zero(),
        FamilySpec::Power { n: 2 } => Rational::zero(),
        FamilySpec::Power { n } => {
            let n = i64::from(*n);
            Rational::new(n - 3, n - 2)
        }
        FamilySpec::Lambda { lambda } => Rational::one() - lambda,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn stage_measures() {
        assert_eq!(measure_at_depth(&FamilySpec::ternary(), 5).unwrap(), Rational::new(32, 243));
        assert_eq!(measure_at_depth(&FamilySpec::power(4).unwrap(), 2).unwrap(), Rational::new(5, 8));
        assert_eq!(measure_at_depth(&FamilySpec::lambda(Rational::new(1, 2)).unwrap(), 0).unwrap(), Rational::one());
    }

    #[test]
    fn limits() {
        assert_eq!(limit_measure(&FamilySpec::power(4).unwrap()).unwrap(), Rational::new(1, 2));
        assert_eq!(limit_measure(&FamilySpec::power(3).unwrap()).unwrap(), Rational::zero());
        assert_eq!(limit_measure(&FamilySpec::power(2).unwrap()).unwrap(), Rational::zero());
        assert_eq!(
            limit_measure(&FamilySpec::lambda(Rational::new(1, 2)).unwrap()).unwrap(),
            Rational::new(1, 2)
        );
        assert_eq!(
            limit_measure(&FamilySpec::digit_set(5, vec![0, 2, 4]).unwrap()).unwrap(),
            Rational::zero()
        );
        assert!(limit_measure(&FamilySpec::Power { n: 0 }).is_err());
    }
}
