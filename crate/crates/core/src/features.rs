//! Feature structures with disjunctive values.
//!
//! A feature structure is a flat map from attributes to non-empty sets of
//! atomic values. An absent attribute means "unconstrained", i.e. the full
//! declared domain of that attribute. Unification intersects value sets per
//! attribute and fails exactly when some intersection comes out empty.
//!
//! Value sets are stored as bitmasks over each attribute's declared domain,
//! so unification is a handful of AND instructions.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Interned attribute identifier; index into a [`FeatureSchema`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AttrId(pub u16);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FeatureError {
    #[error("attribute `{0}` is not declared")]
    UndeclaredAttribute(String),
    #[error("value `{value}` is outside the domain of attribute `{attr}`")]
    ValueOutsideDomain { attr: String, value: String },
    #[error("attribute `{0}` declared more than once")]
    DuplicateAttribute(String),
    #[error("attribute `{0}` has an empty or oversized domain")]
    BadDomain(String),
}

/// Declared attributes and their value domains.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FeatureSchema {
    attrs: Vec<(String, Vec<String>)>,
    index: HashMap<String, AttrId>,
}

impl FeatureSchema {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn declare(&mut self, attr: &str, domain: &[&str]) -> Result<AttrId, FeatureError> {
        if self.index.contains_key(attr) {
            return Err(FeatureError::DuplicateAttribute(attr.to_string()));
        }
        if domain.is_empty() || domain.len() > 32 {
            return Err(FeatureError::BadDomain(attr.to_string()));
        }
        let id = AttrId(self.attrs.len() as u16);
        self.attrs.push((
            attr.to_string(),
            domain.iter().map(|v| v.to_string()).collect(),
        ));
        self.index.insert(attr.to_string(), id);
        Ok(id)
    }

    pub fn attr_id(&self, attr: &str) -> Option<AttrId> {
        self.index.get(attr).copied()
    }

    pub fn attr_name(&self, id: AttrId) -> &str {
        &self.attrs[id.0 as usize].0
    }

    /// Domain values in declaration order; this order is the canonical
    /// output order for value sets.
    pub fn domain(&self, id: AttrId) -> &[String] {
        &self.attrs[id.0 as usize].1
    }

    pub fn value_index(&self, id: AttrId, value: &str) -> Option<u32> {
        self.domain(id).iter().position(|v| v == value).map(|i| i as u32)
    }

    pub fn full_mask(&self, id: AttrId) -> u32 {
        let n = self.domain(id).len() as u32;
        if n == 32 {
            u32::MAX
        } else {
            (1u32 << n) - 1
        }
    }

    pub fn len(&self) -> usize {
        self.attrs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.attrs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (AttrId, &str)> {
        self.attrs
            .iter()
            .enumerate()
            .map(|(i, (n, _))| (AttrId(i as u16), n.as_str()))
    }
}

/// A flat attribute → value-set map. Attributes not present are
/// unconstrained (full domain).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FeatureStructure {
    // Sorted by attribute id; masks are always non-zero and never equal to
    // the full domain mask (a full-domain constraint is dropped, keeping the
    // representation canonical so Eq/Hash behave).
    constraints: Vec<(AttrId, u32)>,
}

impl FeatureStructure {
    /// The unconstrained structure (unit of unification).
    pub fn top() -> Self {
        Self::default()
    }

    /// Builds a structure from `(attribute, values)` pairs, validating
    /// against the schema. The same attribute may appear once only.
    pub fn build(
        schema: &FeatureSchema,
        pairs: &[(&str, &[&str])],
    ) -> Result<Self, FeatureError> {
        let mut fs = FeatureStructure::default();
        for (attr, values) in pairs {
            let id = schema
                .attr_id(attr)
                .ok_or_else(|| FeatureError::UndeclaredAttribute(attr.to_string()))?;
            let mut mask = 0u32;
            for v in *values {
                let i = schema.value_index(id, v).ok_or_else(|| {
                    FeatureError::ValueOutsideDomain {
                        attr: attr.to_string(),
                        value: v.to_string(),
                    }
                })?;
                mask |= 1 << i;
            }
            fs.set(schema, id, mask);
        }
        Ok(fs)
    }

    /// Constrains one attribute to `mask` (intersected with the domain).
    pub fn set(&mut self, schema: &FeatureSchema, id: AttrId, mask: u32) {
        let mask = mask & schema.full_mask(id);
        if mask == schema.full_mask(id) {
            self.constraints.retain(|(a, _)| *a != id);
            return;
        }
        match self.constraints.binary_search_by_key(&id, |(a, _)| *a) {
            Ok(i) => self.constraints[i].1 = mask,
            Err(i) => self.constraints.insert(i, (id, mask)),
        }
    }

    pub fn mask(&self, schema: &FeatureSchema, id: AttrId) -> u32 {
        match self.constraints.binary_search_by_key(&id, |(a, _)| *a) {
            Ok(i) => self.constraints[i].1,
            Err(_) => schema.full_mask(id),
        }
    }

    pub fn is_top(&self) -> bool {
        self.constraints.is_empty()
    }

    /// Unification: per-attribute set intersection, treating absence as the
    /// full domain. `None` means failure (some intersection is empty).
    pub fn unify(&self, other: &Self, schema: &FeatureSchema) -> Option<FeatureStructure> {
        let mut out = self.clone();
        for &(id, mask) in &other.constraints {
            let merged = out.mask(schema, id) & mask;
            if merged == 0 {
                return None;
            }
            out.set(schema, id, merged);
        }
        Some(out)
    }

    /// Constrained attributes with their values, in schema order; used for
    /// canonical output.
    pub fn to_pairs(&self, schema: &FeatureSchema) -> Vec<(String, Vec<String>)> {
        self.constraints
            .iter()
            .map(|&(id, mask)| {
                let values = schema
                    .domain(id)
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, v)| v.clone())
                    .collect();
                (schema.attr_name(id).to_string(), values)
            })
            .collect()
    }

    pub fn render(&self, schema: &FeatureSchema) -> String {
        if self.is_top() {
            return "[]".to_string();
        }
        let parts: Vec<String> = self
            .to_pairs(schema)
            .into_iter()
            .map(|(a, vs)| format!("{}={}", a, vs.join(",")))
            .collect();
        format!("[{}]", parts.join("; "))
    }
}

impl fmt::Display for FeatureStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fs({} constrained)", self.constraints.len())
    }
}
