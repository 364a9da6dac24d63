use std::sync::Arc;

use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::exactmath::Field;

/// Ordered, duplicate-free variable names. Position is the tie-break order:
/// earlier names are larger variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableTable {
    names: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableTable {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(Error::InvalidVariables(format!("bad name `{name}`")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidVariables(format!("duplicate name `{name}`")));
            }
        }
        Ok(Self { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A name not yet in the table, starting from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.index_of(&name).is_some() {
            name.push('_');
        }
        name
    }
}

/// Polynomial ring: variables, active term order and coefficient field.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyRing<F: Field> {
    vars: VariableTable,
    order: MonomialOrder,
    field: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(vars: VariableTable, order: MonomialOrder, field: F) -> Result<Arc<Self>> {
        if let MonomialOrder::Block { front } = &order {
            if front.len() != vars.len() {
                return Err(Error::LengthMismatch {
                    expected: vars.len(),
                    got: front.len(),
                });
            }
        }
        Ok(Arc::new(Self { vars, order, field }))
    }

    pub fn vars(&self) -> &VariableTable {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>> {
        Self::new(self.vars.clone(), order, self.field.clone())
    }
}
