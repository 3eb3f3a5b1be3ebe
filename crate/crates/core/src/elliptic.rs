//! Simple elliptic singularities, keyed by their degree `d = −E·E`.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SimpleElliptic {
    d: u64,
}

impl SimpleElliptic {
    /// `None` for `d = 0`.
    pub fn new(d: u64) -> Option<Self> {
        (d >= 1).then_some(SimpleElliptic { d })
    }

    pub fn degree(&self) -> u64 {
        self.d
    }

    pub fn embedded_dimension(&self) -> u64 {
        self.d.max(3)
    }

    pub fn is_lci(&self) -> bool {
        self.d <= 4
    }

    pub fn is_smoothable(&self) -> bool {
        (1..=9).contains(&self.d)
    }

    /// Degrees 5, 6 and 7 are smoothable but have no lci smoothing lifting.
    pub fn has_lci_smoothing_lifting(&self) -> bool {
        self.is_smoothable() && !(5..=7).contains(&self.d)
    }

    pub fn summary(&self) -> EllipticSummary {
        EllipticSummary {
            degree: self.d,
            embedded_dimension: self.embedded_dimension(),
            is_lci: self.is_lci(),
            is_smoothable: self.is_smoothable(),
            has_lci_smoothing_lifting: self.has_lci_smoothing_lifting(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EllipticSummary {
    pub degree: u64,
    pub embedded_dimension: u64,
    pub is_lci: bool,
    pub is_smoothable: bool,
    pub has_lci_smoothing_lifting: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn se(d: u64) -> SimpleElliptic {
        SimpleElliptic::new(d).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(se(1).embedded_dimension(), 3);
        assert_eq!(se(3).embedded_dimension(), 3);
        assert_eq!(se(8).embedded_dimension(), 8);
        assert!(se(4).is_lci() && se(1).is_lci() && !se(5).is_lci());
        assert!(se(9).is_smoothable() && se(1).is_smoothable() && !se(10).is_smoothable());
        assert!(se(8).has_lci_smoothing_lifting());
        assert!(!se(6).has_lci_smoothing_lifting());
        assert!(se(2).has_lci_smoothing_lifting());
        assert!(SimpleElliptic::new(0).is_none());
    }

    #[test]
    fn lifting_set() {
        let lifts: Vec<u64> = (1..=100).filter(|&d| se(d).has_lci_smoothing_lifting()).collect();
        assert_eq!(lifts, vec![1, 2, 3, 4, 8, 9]);
    }

    #[test]
    fn implications() {
        for d in 1..=100 {
            let s = se(d);
            assert!(!s.has_lci_smoothing_lifting() || s.is_smoothable());
            assert!(!s.is_lci() || s.has_lci_smoothing_lifting());
        }
    }
}
