use crate::bits::{self, VertexSet};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// A prime generated by the variables of a nonempty vertex set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MonomialPrime {
    support: VertexSet,
}

impl MonomialPrime {
    /// `None` for the empty set.
    pub fn new(support: VertexSet) -> Option<Self> {
        (support != 0).then_some(MonomialPrime { support })
    }

    pub fn support(&self) -> VertexSet {
        self.support
    }

    /// 0-based variable indices.
    pub fn indices(&self) -> Vec<usize> {
        bits::to_vec(self.support)
    }

    pub fn height(&self) -> usize {
        bits::len(self.support)
    }
}

impl Ord for MonomialPrime {
    /// Lexicographic on the sorted index lists.
    fn cmp(&self, other: &Self) -> Ordering {
        bits::elements(self.support).cmp(bits::elements(other.support))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.indices().iter().map(|i| format!("x{}", i + 1)).collect();
        write!(f, "({})", names.join(","))
    }
}

impl Serialize for MonomialPrime {
    /// 1-based variable indices.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<usize> = self.indices().iter().map(|i| i + 1).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialPrime {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if v.iter().any(|&i| i == 0 || i > 64) {
            return Err(serde::de::Error::custom("variable index out of range"));
        }
        MonomialPrime::new(bits::from_indices(v.into_iter().map(|i| i - 1)))
            .ok_or_else(|| serde::de::Error::custom("empty prime"))
    }
}

/// A sorted, duplicate-free set of monomial primes.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(from = "Vec<MonomialPrime>", into = "Vec<MonomialPrime>")]
pub struct PrimeSet {
    primes: Vec<MonomialPrime>,
}

impl From<Vec<MonomialPrime>> for PrimeSet {
    fn from(mut primes: Vec<MonomialPrime>) -> Self {
        primes.sort();
        primes.dedup();
        PrimeSet { primes }
    }
}

impl From<PrimeSet> for Vec<MonomialPrime> {
    fn from(p: PrimeSet) -> Self {
        p.primes
    }
}

impl FromIterator<MonomialPrime> for PrimeSet {
    fn from_iter<I: IntoIterator<Item = MonomialPrime>>(iter: I) -> Self {
        PrimeSet::from(iter.into_iter().collect::<Vec<_>>())
    }
}

impl PrimeSet {
    /// Primes for the nonempty sets among `supports`.
    pub fn from_supports<I: IntoIterator<Item = VertexSet>>(supports: I) -> Self {
        supports.into_iter().filter_map(MonomialPrime::new).collect()
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &MonomialPrime> {
        self.primes.iter()
    }

    pub fn supports(&self) -> Vec<VertexSet> {
        self.primes.iter().map(|p| p.support).collect()
    }

    pub fn contains_support(&self, support: VertexSet) -> bool {
        self.primes.iter().any(|p| p.support == support)
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.primes.iter().all(|p| other.contains_support(p.support))
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        self.primes.iter().chain(other.primes.iter()).copied().collect()
    }

    /// Primes of `self` that are not in `other`.
    pub fn difference(&self, other: &PrimeSet) -> PrimeSet {
        self.primes
            .iter()
            .filter(|p| !other.contains_support(p.support))
            .copied()
            .collect()
    }

    /// Inclusion-minimal members.
    pub fn minimal(&self) -> PrimeSet {
        PrimeSet::from_supports(bits::minimal_sets(self.supports()))
    }

    /// Members that properly contain some other member.
    pub fn embedded(&self) -> PrimeSet {
        self.difference(&self.minimal())
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}
