use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::set::{self, Set};

/// Name of a ground-set element.
///
/// Labels that parse as nonnegative integers sort numerically and before all
/// other labels, so `2 < 10 < a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Label(String);

impl Label {
    pub fn new(s: impl Into<String>) -> Self {
        Label(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn numeric(&self) -> Option<u64> {
        if self.0.is_empty() || !self.0.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        self.0.parse().ok()
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.numeric(), other.numeric()) {
            (Some(a), Some(b)) => a.cmp(&b).then_with(|| self.0.cmp(&other.0)),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self.0.cmp(&other.0),
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label(s.to_owned())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label(s)
    }
}

impl From<&Label> for Label {
    fn from(l: &Label) -> Self {
        l.clone()
    }
}

macro_rules! label_from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Label {
            fn from(n: $t) -> Self {
                Label(n.to_string())
            }
        }
    )*};
}
label_from_int!(u8, u16, u32, u64, usize, i32, i64);

// Integer-looking labels are written as JSON numbers so documents stay tidy.
impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.numeric() {
            Some(n) if n.to_string() == self.0 => s.serialize_u64(n),
            _ => s.serialize_str(&self.0),
        }
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct LabelVisitor;
        impl Visitor<'_> for LabelVisitor {
            type Value = Label;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a nonnegative integer or a string")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Label, E> {
                Ok(Label::from(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Label, E> {
                if v < 0 {
                    return Err(E::custom("negative element label"));
                }
                Ok(Label::from(v))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Label, E> {
                if v.is_empty() {
                    return Err(E::custom("empty element label"));
                }
                Ok(Label::from(v))
            }
        }
        d.deserialize_any(LabelVisitor)
    }
}

/// Collects anything label-like into a `Vec<Label>`.
pub fn labels<I, L>(items: I) -> Vec<Label>
where
    I: IntoIterator<Item = L>,
    L: Into<Label>,
{
    items.into_iter().map(Into::into).collect()
}

/// A finite ground set. Labels are kept sorted, and the position of a label
/// in that order is its internal index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GroundSet {
    labels: Vec<Label>,
}

impl GroundSet {
    pub fn new<I, L>(items: I) -> Result<Self>
    where
        I: IntoIterator<Item = L>,
        L: Into<Label>,
    {
        let mut labels = labels(items);
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0].to_string()));
        }
        if labels.len() > set::MAX_ELEMENTS {
            return Err(Error::TooLarge {
                size: labels.len(),
                cap: set::MAX_ELEMENTS,
            });
        }
        Ok(GroundSet { labels })
    }

    /// The ground set `{1, ..., n}`.
    pub fn numbered(n: usize) -> Self {
        GroundSet::new(1..=n).expect("distinct integer labels")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &Label {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.index_of(label).is_some()
    }

    pub fn full(&self) -> Set {
        set::full(self.len())
    }

    pub fn mask_of<'a, I>(&self, items: I) -> Result<Set>
    where
        I: IntoIterator<Item = &'a Label>,
    {
        let mut mask = 0;
        for l in items {
            let i = self
                .index_of(l)
                .ok_or_else(|| Error::ElementNotInGroundSet(l.to_string()))?;
            mask |= set::bit(i);
        }
        Ok(mask)
    }

    pub fn labels_of(&self, mask: Set) -> Vec<Label> {
        set::elements(mask)
            .map(|i| self.labels[i].clone())
            .collect()
    }

    /// The ground set restricted to the indices in `keep`.
    pub fn restrict(&self, keep: Set) -> GroundSet {
        GroundSet {
            labels: self.labels_of(keep),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeric_labels_sort_numerically() {
        let g = GroundSet::new(["10", "2", "b", "a", "1"]).unwrap();
        let names: Vec<&str> = g.labels().iter().map(Label::as_str).collect();
        assert_eq!(names, ["1", "2", "10", "a", "b"]);
    }

    #[test]
    fn duplicates_rejected() {
        assert_eq!(
            GroundSet::new([1, 2, 1]),
            Err(Error::DuplicateLabel("1".into()))
        );
    }

    #[test]
    fn unknown_label() {
        let g = GroundSet::numbered(3);
        assert!(matches!(
            g.mask_of(&[Label::from(4)]),
            Err(Error::ElementNotInGroundSet(_))
        ));
        assert_eq!(g.mask_of(&labels([1, 3])).unwrap(), 0b101);
    }
}
