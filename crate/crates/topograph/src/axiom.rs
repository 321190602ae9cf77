use std::fmt;

/// The six separation axioms, ordered so that a higher axiom separates fewer
/// pairs: T0 < T1 < T2 < T3' < T3'' < T4. The derived `Ord` is this order,
/// which is exactly the edge-monotonicity order of the graphs G_i.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Axiom {
    T0,
    T1,
    T2,
    T3Prime,
    T3DoublePrime,
    T4,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::T0,
        Axiom::T1,
        Axiom::T2,
        Axiom::T3Prime,
        Axiom::T3DoublePrime,
        Axiom::T4,
    ];

    /// Short token used by the CLI and in file names.
    pub fn token(self) -> &'static str {
        match self {
            Axiom::T0 => "t0",
            Axiom::T1 => "t1",
            Axiom::T2 => "t2",
            Axiom::T3Prime => "t3p",
            Axiom::T3DoublePrime => "t3pp",
            Axiom::T4 => "t4",
        }
    }

    pub fn parse(s: &str) -> Option<Axiom> {
        Axiom::ALL.into_iter().find(|a| a.token() == s)
    }

    /// Numeric index i with both T3 variants mapping to 3; this is the
    /// distance bound of the i-th axiom in G_1.
    pub fn distance_bound(self) -> usize {
        match self {
            Axiom::T0 => 0,
            Axiom::T1 => 1,
            Axiom::T2 => 2,
            Axiom::T3Prime | Axiom::T3DoublePrime => 3,
            Axiom::T4 => 4,
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_tokens() {
        assert!(Axiom::T0 < Axiom::T1);
        assert!(Axiom::T3Prime < Axiom::T3DoublePrime);
        assert!(Axiom::T3DoublePrime < Axiom::T4);
        for a in Axiom::ALL {
            assert_eq!(Axiom::parse(a.token()), Some(a));
        }
        assert_eq!(Axiom::parse("t5"), None);
    }
}
