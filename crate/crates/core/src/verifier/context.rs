use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, Elem, FiniteGroup, Limits, Subgroup};
use crate::power::{analyze_powers, profile_from_analysis, NonPowerProfile, PowerAnalysis};
use crate::structure::{frobenius_structure_in, FrobeniusStructure};

pub(crate) struct QuotientData {
    pub normal: Subgroup,
    pub group: FiniteGroup,
    pub projection: Vec<Elem>,
}

/// Lazily computed, cached data about one group, shared by all checks run on
/// it. Not `Sync`: each worker builds its own.
pub struct GroupContext<'g> {
    pub group: &'g FiniteGroup,
    pub limits: Limits,
    classes: OnceCell<Vec<ConjugacyClass>>,
    lattice: OnceCell<Result<Vec<Subgroup>>>,
    quotients: OnceCell<Result<Vec<QuotientData>>>,
    frobenius: OnceCell<Result<Option<FrobeniusStructure>>>,
    powers: RefCell<HashMap<u64, Rc<PowerAnalysis>>>,
}

impl<'g> GroupContext<'g> {
    pub fn new(group: &'g FiniteGroup, limits: Limits) -> Self {
        Self {
            group,
            limits,
            classes: OnceCell::new(),
            lattice: OnceCell::new(),
            quotients: OnceCell::new(),
            frobenius: OnceCell::new(),
            powers: RefCell::new(HashMap::new()),
        }
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        self.classes.get_or_init(|| self.group.conjugacy_classes())
    }

    pub fn powers(&self, k: u64) -> Rc<PowerAnalysis> {
        if let Some(a) = self.powers.borrow().get(&k) {
            return a.clone();
        }
        let a = Rc::new(analyze_powers(self.group, k).expect("k >= 1"));
        self.powers.borrow_mut().insert(k, a.clone());
        a
    }

    pub fn n(&self, k: u64) -> usize {
        self.powers(k).n()
    }

    /// Profile of `N_p(G)`; `p` must be prime.
    pub fn profile(&self, p: u64) -> NonPowerProfile {
        profile_from_analysis(self.group, &self.powers(p), self.classes())
    }

    pub fn lattice(&self) -> Result<&[Subgroup], Error> {
        self.lattice
            .get_or_init(|| self.group.all_subgroups(self.limits.lattice_cap))
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    pub(crate) fn quotients(&self) -> Result<&[QuotientData], Error> {
        self.quotients
            .get_or_init(|| {
                let lattice = self.lattice()?;
                lattice
                    .iter()
                    .filter(|n| self.group.is_normal(n))
                    .map(|n| {
                        let (group, projection) = self.group.quotient(n)?;
                        Ok(QuotientData { normal: n.clone(), group, projection })
                    })
                    .collect()
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    pub fn frobenius(&self) -> Result<Option<&FrobeniusStructure>, Error> {
        self.frobenius
            .get_or_init(|| Ok(frobenius_structure_in(self.group, self.lattice()?)))
            .as_ref()
            .map(Option::as_ref)
            .map_err(Clone::clone)
    }
}
