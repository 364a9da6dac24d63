//! Ideal files:
//! `{"field": "Q"|"Fp:<p>", "order": "grevlex"|"lex"|{"block": [..]}, "vars": [..], "gens": [..]}`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::ideal::IdealPresentation;
use crate::error::{Error, Result};
use crate::exactmath::{Field, PrimeField, Rationals};
use crate::polyring::{parse_poly, MonomialOrder, PolyRing, Polynomial, VariableTable};

/// Runtime choice of coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldDescriptor {
    Rationals,
    Prime(PrimeField),
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Self::Rationals);
        }
        let p = s
            .strip_prefix("Fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::Malformed(format!("field `{s}` is neither Q nor Fp:<p>")))?;
        Ok(Self::Prime(PrimeField::new(p)?))
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rationals => f.write_str(&Rationals.descriptor()),
            Self::Prime(p) => f.write_str(&p.descriptor()),
        }
    }
}

pub fn order_to_json(order: &MonomialOrder, vars: &VariableTable) -> Value {
    match order {
        MonomialOrder::Lex => json!("lex"),
        MonomialOrder::Grevlex => json!("grevlex"),
        MonomialOrder::Block { front } => {
            let names: Vec<&str> = front
                .iter()
                .enumerate()
                .filter(|(_, &f)| f)
                .map(|(i, _)| vars.name(i))
                .collect();
            json!({ "block": names })
        }
    }
}

pub fn order_from_json(value: &Value, vars: &VariableTable) -> Result<MonomialOrder> {
    match value {
        Value::String(s) if s == "lex" => Ok(MonomialOrder::Lex),
        Value::String(s) if s == "grevlex" => Ok(MonomialOrder::Grevlex),
        Value::Object(map) if map.len() == 1 && map.contains_key("block") => {
            let names = map["block"]
                .as_array()
                .ok_or_else(|| Error::Malformed("block order needs a list of variables".into()))?;
            let mut front = Vec::new();
            for name in names {
                let name = name
                    .as_str()
                    .ok_or_else(|| Error::Malformed("block variables must be strings".into()))?;
                front.push(
                    vars.index_of(name)
                        .ok_or_else(|| Error::UnknownVariable(name.to_string()))?,
                );
            }
            Ok(MonomialOrder::block(vars.len(), &front))
        }
        other => Err(Error::Malformed(format!("unknown order {other}"))),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealFile {
    pub field: String,
    pub order: Value,
    pub vars: Vec<String>,
    pub gens: Vec<String>,
}

/// An ideal over whichever field the file names.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyIdeal {
    Rational(IdealPresentation<Rationals>),
    Prime(IdealPresentation<PrimeField>),
}

fn build<F: Field>(file: &IdealFile, field: F) -> Result<IdealPresentation<F>> {
    let vars = VariableTable::new(file.vars.iter().cloned())?;
    let order = order_from_json(&file.order, &vars)?;
    let ring = PolyRing::new(vars, order, field)?;
    let gens = file
        .gens
        .iter()
        .map(|g| parse_poly(g, &ring))
        .collect::<Result<Vec<_>>>()?;
    IdealPresentation::new(&ring, gens)
}

impl IdealFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn from_generators<F: Field>(ring: &Arc<PolyRing<F>>, gens: &[Polynomial<F>]) -> Self {
        Self {
            field: ring.field().descriptor(),
            order: order_to_json(ring.order(), ring.vars()),
            vars: ring.vars().names().to_vec(),
            gens: gens.iter().map(|g| g.to_string()).collect(),
        }
    }

    pub fn load(&self) -> Result<AnyIdeal> {
        match self.field.parse::<FieldDescriptor>()? {
            FieldDescriptor::Rationals => build(self, Rationals).map(AnyIdeal::Rational),
            FieldDescriptor::Prime(p) => build(self, p).map(AnyIdeal::Prime),
        }
    }
}
