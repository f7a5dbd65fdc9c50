use crate::error::FeatureImageError;

/// A probability distribution over emotion classes. One-hot for raw clips,
/// dense after label mixing.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelDistribution(Vec<f64>);

impl LabelDistribution {
    pub fn new(values: Vec<f64>) -> Result<Self, FeatureImageError> {
        let sum: f64 = values.iter().sum();
        if values.iter().any(|&v| v < 0.0) || (sum - 1.0).abs() > 1e-9 {
            return Err(FeatureImageError::InvalidLabel(sum));
        }
        Ok(Self(values))
    }

    pub fn one_hot(class: usize, n_classes: usize) -> Self {
        let mut values = vec![0.0; n_classes];
        values[class] = 1.0;
        Self(values)
    }

    /// `lambda * a + (1 - lambda) * b`, the CutMix label rule.
    pub fn mix(a: &Self, b: &Self, lambda: f64) -> Self {
        assert_eq!(a.0.len(), b.0.len(), "label dimensionality mismatch");
        Self(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| lambda * x + (1.0 - lambda) * y)
                .collect(),
        )
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn argmax(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .map(|(i, _)| i)
            .unwrap_or(0)
    }
}
