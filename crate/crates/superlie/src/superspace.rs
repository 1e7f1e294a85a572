//! The vector superspace M with homogeneous basis {u_i : i ∈ I} ∪ {v_α : α ∈ R}.
//!
//! Slots 0..|I| are the u's (all even); slot |I| + id is v_α for the root
//! with that id, carrying the parity of α.

use crate::system::GrsSystem;

#[derive(Clone, Debug)]
pub struct ModuleBasis {
    n_base: usize,
    n_roots: usize,
    parity: Vec<u8>,
}

impl ModuleBasis {
    pub fn from_system(sys: &GrsSystem) -> ModuleBasis {
        let n_base = sys.base_len();
        let n_roots = sys.len();
        let mut parity = vec![0u8; n_base];
        parity.extend((0..n_roots).map(|id| sys.parity_id(id)));
        ModuleBasis {
            n_base,
            n_roots,
            parity,
        }
    }

    pub fn dim(&self) -> usize {
        self.n_base + self.n_roots
    }

    pub fn n_base(&self) -> usize {
        self.n_base
    }

    pub fn n_roots(&self) -> usize {
        self.n_roots
    }

    /// Slot of u_i.
    pub fn u_slot(&self, i: usize) -> usize {
        debug_assert!(i < self.n_base);
        i
    }

    /// Slot of v_α for root id.
    pub fn v_slot(&self, root_id: usize) -> usize {
        debug_assert!(root_id < self.n_roots);
        self.n_base + root_id
    }

    /// Root id of a v-slot, if it is one.
    pub fn slot_root(&self, slot: usize) -> Option<usize> {
        (slot >= self.n_base).then(|| slot - self.n_base)
    }

    pub fn slot_parity(&self, slot: usize) -> u8 {
        self.parity[slot]
    }
}
