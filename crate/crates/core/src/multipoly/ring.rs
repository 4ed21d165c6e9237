use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::Field;
use crate::multipoly::MonomialOrder;

/// Polynomial ring: ordered variable names, a monomial order and the
/// coefficient field descriptor.
#[derive(Debug, Clone)]
pub struct Ring<F: Field> {
    vars: Vec<String>,
    index: HashMap<String, usize>,
    order: MonomialOrder,
    desc: F::Desc,
}

impl<F: Field> PartialEq for Ring<F> {
    fn eq(&self, o: &Self) -> bool {
        self.vars == o.vars && self.order == o.order && self.desc == o.desc
    }
}

impl<F: Field> Eq for Ring<F> {}

impl<F: Field> Ring<F> {
    pub fn new<S: AsRef<str>>(vars: &[S], order: MonomialOrder, desc: F::Desc) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        order.validate(vars.len())?;
        let mut index = HashMap::new();
        for (i, v) in vars.iter().enumerate() {
            if v == "zeta" || v.is_empty() || !v.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::InvalidSpec(format!("bad variable name `{}`", v)));
            }
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidSpec(format!("duplicate variable `{}`", v)));
            }
        }
        Ok(Arc::new(Ring {
            vars,
            index,
            order,
            desc,
        }))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn desc(&self) -> &F::Desc {
        &self.desc
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>> {
        Ring::new(&self.vars, order, self.desc.clone())
    }

    pub fn with_vars<S: AsRef<str>>(&self, vars: &[S], order: MonomialOrder) -> Result<Arc<Self>> {
        Ring::new(vars, order, self.desc.clone())
    }

    pub fn zero(&self) -> F {
        F::zero(&self.desc)
    }

    pub fn one(&self) -> F {
        F::one(&self.desc)
    }
}
