//! Symmetric properties as classifiers of frequency classes.
//!
//! A property of `f: [N] -> [M]` that is invariant under relabeling both the
//! domain and the range depends only on the multiset of preimage sizes, so it
//! is fully described by a label per partition of `N`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sympoly::{partitions_of, FrequencyVector, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    One,
    Zero,
    Undefined,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::One => "One",
            Label::Zero => "Zero",
            Label::Undefined => "Undefined",
        })
    }
}

/// User-supplied property: explicit labels for partitions of a fixed `n`;
/// unlisted partitions are [`Label::Undefined`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CustomRepr", into = "CustomRepr")]
pub struct CustomProperty {
    name: String,
    n: u32,
    classes: BTreeMap<Partition, Label>,
}

impl CustomProperty {
    pub fn new<I>(name: impl Into<String>, n: u32, classes: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Label)>,
    {
        let mut map = BTreeMap::new();
        for (p, label) in classes {
            if p.weight() != n {
                return Err(Error::WeightMismatch {
                    expected: n,
                    got: p.weight(),
                });
            }
            if map.insert(p.clone(), label).is_some() {
                return Err(Error::InvalidArgument(format!("partition {p} listed twice")));
            }
        }
        Ok(CustomProperty {
            name: name.into(),
            n,
            classes: map,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

#[derive(Serialize, Deserialize)]
struct CustomClassRepr {
    partition: Partition,
    label: Label,
}

#[derive(Serialize, Deserialize)]
struct CustomRepr {
    #[serde(default = "default_custom_name")]
    name: String,
    n: u32,
    classes: Vec<CustomClassRepr>,
}

fn default_custom_name() -> String {
    "custom".to_string()
}

impl TryFrom<CustomRepr> for CustomProperty {
    type Error = Error;

    fn try_from(r: CustomRepr) -> Result<Self> {
        CustomProperty::new(r.name, r.n, r.classes.into_iter().map(|c| (c.partition, c.label)))
    }
}

impl From<CustomProperty> for CustomRepr {
    fn from(p: CustomProperty) -> Self {
        CustomRepr {
            name: p.name,
            n: p.n,
            classes: p
                .classes
                .into_iter()
                .map(|(partition, label)| CustomClassRepr { partition, label })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Property {
    /// One-to-one vs two-to-one; everything else unconstrained.
    Collision,
    /// One-to-one vs any repeated value.
    ElementDistinctness,
    /// One-to-one vs some value of multiplicity at least 3; multiplicity
    /// exactly 2 is unconstrained.
    ModifiedElementDistinctness,
    AlwaysOne,
    Custom(CustomProperty),
}

impl Property {
    pub fn name(&self) -> &str {
        match self {
            Property::Collision => "collision",
            Property::ElementDistinctness => "element_distinctness",
            Property::ModifiedElementDistinctness => "modified_element_distinctness",
            Property::AlwaysOne => "always_one",
            Property::Custom(c) => &c.name,
        }
    }

    /// Built-ins comparing against one-to-one functions only make sense for
    /// `m >= n`.
    pub fn requires_m_at_least_n(&self) -> bool {
        matches!(
            self,
            Property::Collision | Property::ElementDistinctness | Property::ModifiedElementDistinctness
        )
    }

    pub fn classify(&self, n: u32, z: &FrequencyVector) -> Result<Label> {
        if z.weight() != n {
            return Err(Error::WeightMismatch {
                expected: n,
                got: z.weight(),
            });
        }
        let parts = z.nonzero().parts();
        let max = z.max();
        Ok(match self {
            Property::Collision => {
                if parts.iter().all(|&p| p == 1) {
                    Label::One
                } else if parts.iter().all(|&p| p == 2) {
                    Label::Zero
                } else {
                    Label::Undefined
                }
            }
            Property::ElementDistinctness => {
                if max <= 1 {
                    Label::One
                } else {
                    Label::Zero
                }
            }
            Property::ModifiedElementDistinctness => match max {
                0 | 1 => Label::One,
                2 => Label::Undefined,
                _ => Label::Zero,
            },
            Property::AlwaysOne => Label::One,
            Property::Custom(c) => {
                if c.n != n {
                    return Err(Error::WeightMismatch {
                        expected: c.n,
                        got: n,
                    });
                }
                c.classes
                    .get(z.nonzero())
                    .copied()
                    .unwrap_or(Label::Undefined)
            }
        })
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "collision" => Ok(Property::Collision),
            "ed" | "element_distinctness" => Ok(Property::ElementDistinctness),
            "modified_ed" | "modified_element_distinctness" => Ok(Property::ModifiedElementDistinctness),
            "always_one" => Ok(Property::AlwaysOne),
            _ => Err(Error::InvalidArgument(format!("unknown property {s:?}"))),
        }
    }
}

/// Every frequency class of `f: [n] -> [m]` with its label, in
/// reverse-lexicographic partition order.
pub fn enumerate_classes(prop: &Property, n: u32, m: u32) -> Result<Vec<(Partition, Label)>> {
    partitions_of(n, n.min(m) as usize)
        .into_iter()
        .map(|p| {
            let z = FrequencyVector::from_partition(m, &p)?;
            let label = prop.classify(n, &z)?;
            Ok((p, label))
        })
        .collect()
}
