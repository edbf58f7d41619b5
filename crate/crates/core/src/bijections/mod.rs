//! The partition bijections: the Stockhofe–Keith map `O_m → D_m`, the
//! insertion bijection `O_{c,m}ⁿ → L_{c,m}ⁿ`, the residue relabelings, and the
//! composite m-falling lecture hall bijection `O_{m↘}ⁿ → L_{m↘}ⁿ`.

mod insertion;
mod relabel;
mod stockhofe_keith;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::{Modulus, Partition};

pub use insertion::{delete_part, insert_part, phi_n, phi_n_traced, psi_n};
pub use relabel::{
    block_condition_holds, composite_inverse, composite_phi_n, composite_phi_n_traced, g_forward, g_inverse, relabel_to_c,
    restore_residues, ResidueVector,
};
pub use stockhofe_keith::{
    base_flat, base_flat_with_order, sk_insert, sk_inverse, stockhofe_keith, stockhofe_keith_traced,
    FlatDecomposition, ReductionOrder,
};

/// One frame of a map's step-by-step evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub label: String,
    pub partition: Partition,
}

/// Frames recorded while evaluating a map, in order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub modulus: Option<Modulus>,
    pub steps: Vec<TraceStep>,
}

impl Trace {
    pub(crate) fn new(modulus: Modulus) -> Self {
        Trace {
            modulus: Some(modulus),
            steps: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, label: impl Into<String>, partition: &Partition) {
        self.steps.push(TraceStep {
            label: label.into(),
            partition: partition.clone(),
        });
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{}: {}", step.label, step.partition)?;
            if let Some(m) = self.modulus {
                for row in step.partition.render_modular_ferrers(m).lines() {
                    writeln!(f, "    {row}")?;
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn record(trace: &mut Option<&mut Trace>, label: impl Into<String>, partition: &Partition) {
    if let Some(t) = trace.as_deref_mut() {
        t.push(label, partition);
    }
}
