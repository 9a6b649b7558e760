use std::collections::{BTreeSet, HashMap};

use super::{validate_rack, AlgebraError, FiniteGroup, Rack, RightAction};

/// A right `G`-set `X` with an equivariant map `π: X → G`, where `G` acts on
/// itself by conjugation. Carries the induced rack `x◁y = x·π(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedRack {
    labels: Vec<String>,
    group: FiniteGroup,
    action: RightAction,
    pi: Vec<usize>,
    rack: Rack,
}

pub fn validate_augmented_rack(
    labels: Vec<String>,
    group: FiniteGroup,
    action: Vec<Vec<usize>>,
    pi: Vec<usize>,
) -> Result<AugmentedRack, AlgebraError> {
    let n = labels.len();
    if action.len() != n {
        return Err(AlgebraError::ActionInvalid(format!(
            "action has {} rows for a carrier of size {n}",
            action.len()
        )));
    }
    let action = RightAction::new(&group, action)?;
    check_pi(&pi, n, &group)?;
    check_equivariance(&action, &pi, &group)?;
    let op = (0..n).map(|x| (0..n).map(|y| action.act(x, pi[y])).collect()).collect();
    let rack = validate_rack(op)?;
    Ok(AugmentedRack { labels, group, action, pi, rack })
}

fn check_pi(pi: &[usize], carrier: usize, group: &FiniteGroup) -> Result<(), AlgebraError> {
    if pi.len() != carrier {
        return Err(AlgebraError::SizeMismatch { what: "pi", expected: carrier, found: pi.len() });
    }
    if let Some(&value) = pi.iter().find(|&&g| g >= group.order()) {
        return Err(AlgebraError::EntryOutOfRange { value, bound: group.order() });
    }
    Ok(())
}

fn check_equivariance(
    action: &RightAction,
    pi: &[usize],
    group: &FiniteGroup,
) -> Result<(), AlgebraError> {
    for x in 0..pi.len() {
        for g in group.elements() {
            if pi[action.act(x, g)] != group.conjugate(pi[x], g) {
                return Err(AlgebraError::NotEquivariant { x, g });
            }
        }
    }
    Ok(())
}

/// The conjugation rack on a conjugation-closed subset of `group`, augmented
/// by the inclusion.
pub fn conjugation_structure(
    group: &FiniteGroup,
    subset: &[usize],
) -> Result<AugmentedRack, AlgebraError> {
    let members: Vec<usize> = subset.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if let Some(&value) = members.iter().find(|&&x| x >= group.order()) {
        return Err(AlgebraError::EntryOutOfRange { value, bound: group.order() });
    }
    let position: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut action = Vec::with_capacity(members.len());
    for &x in &members {
        let mut row = Vec::with_capacity(group.order());
        for g in group.elements() {
            let y = group.conjugate(x, g);
            match position.get(&y) {
                Some(&i) => row.push(i),
                None => return Err(AlgebraError::NotClosed { element: x, by: g }),
            }
        }
        action.push(row);
    }
    let labels = members.iter().map(|&x| group.label(x).to_string()).collect();
    validate_augmented_rack(labels, group.clone(), action, members)
}

impl AugmentedRack {
    pub fn carrier_size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn action(&self) -> &RightAction {
        &self.action
    }

    pub fn pi(&self, x: usize) -> usize {
        self.pi[x]
    }

    pub fn pi_table(&self) -> &[usize] {
        &self.pi
    }

    /// The induced rack `x◁y = x·π(y)`.
    pub fn rack(&self) -> &Rack {
        &self.rack
    }
}

/// A pre-crossed module `π: X → G`: an augmented rack in which `X` is a group,
/// `G` acts by automorphisms and `π` is a homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreCrossedModule {
    x_group: FiniteGroup,
    group: FiniteGroup,
    action: RightAction,
    pi: Vec<usize>,
}

pub fn validate_precrossed(
    x_group: FiniteGroup,
    group: FiniteGroup,
    action: Vec<Vec<usize>>,
    pi: Vec<usize>,
) -> Result<PreCrossedModule, AlgebraError> {
    if action.len() != x_group.order() {
        return Err(AlgebraError::ActionInvalid(format!(
            "action has {} rows for a group of order {}",
            action.len(),
            x_group.order()
        )));
    }
    let action = RightAction::new(&group, action)?;
    if let Some((x, y, g)) = action.automorphism_violation(&x_group) {
        return Err(AlgebraError::NotByAutomorphisms { x, y, g });
    }
    check_pi(&pi, x_group.order(), &group)?;
    for a in x_group.elements() {
        for b in x_group.elements() {
            if pi[x_group.mul(a, b)] != group.mul(pi[a], pi[b]) {
                return Err(AlgebraError::NotHomomorphism { a, b });
            }
        }
    }
    check_equivariance(&action, &pi, &group)?;
    Ok(PreCrossedModule { x_group, group, action, pi })
}

impl PreCrossedModule {
    /// `id: G → G` with `G` acting on itself by conjugation.
    pub fn identity_conjugation(group: &FiniteGroup) -> Self {
        validate_precrossed(
            group.clone(),
            group.clone(),
            RightAction::conjugation(group).table().to_vec(),
            group.elements().collect(),
        )
        .expect("identity with conjugation is pre-crossed")
    }

    /// `X → 1`, the trivial augmentation.
    pub fn over_trivial_group(x_group: &FiniteGroup) -> Self {
        let g = FiniteGroup::trivial();
        Self {
            action: RightAction::trivial(x_group.order(), &g),
            pi: vec![0; x_group.order()],
            x_group: x_group.clone(),
            group: g,
        }
    }

    pub fn x_group(&self) -> &FiniteGroup {
        &self.x_group
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn action(&self) -> &RightAction {
        &self.action
    }

    pub fn pi(&self, x: usize) -> usize {
        self.pi[x]
    }

    pub fn pi_table(&self) -> &[usize] {
        &self.pi
    }

    pub fn is_surjective(&self) -> bool {
        self.pi.iter().collect::<BTreeSet<_>>().len() == self.group.order()
    }

    /// Replaces `G` by the image `π(X)`.
    pub fn restrict_to_image(&self) -> PreCrossedModule {
        let (image, embedding) = self.group.generated_subgroup(&self.pi);
        let position: HashMap<usize, usize> =
            embedding.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let action = self
            .x_group
            .elements()
            .map(|x| embedding.iter().map(|&g| self.action.act(x, g)).collect())
            .collect();
        let pi = self.pi.iter().map(|g| position[g]).collect();
        validate_precrossed(self.x_group.clone(), image, action, pi)
            .expect("restriction to the image stays pre-crossed")
    }

    /// Forgets the group structure on `X`.
    pub fn as_augmented_rack(&self) -> AugmentedRack {
        validate_augmented_rack(
            self.x_group.labels().to_vec(),
            self.group.clone(),
            self.action.table().to_vec(),
            self.pi.clone(),
        )
        .expect("a pre-crossed module is an augmented rack")
    }
}

/// The pre-crossed action `φ_π: X → Aut(X)`, `φ(y) = (x ↦ x^π(y))`.
#[derive(Clone, Debug)]
pub struct PreCrossedAction {
    /// `phi[y][x] = x^π(y)`.
    pub phi: Vec<Vec<usize>>,
    /// The permutation group `φ(X)`.
    pub image: FiniteGroup,
    /// Index in `image` of `φ(y)` for each `y`.
    pub image_index: Vec<usize>,
    /// `φ: X → φ(X)` as a pre-crossed module.
    pub reduced: PreCrossedModule,
}

pub fn precrossed_action(p: &PreCrossedModule) -> PreCrossedAction {
    let x = &p.x_group;
    let phi: Vec<Vec<usize>> = x
        .elements()
        .map(|y| x.elements().map(|z| p.action.act(z, p.pi[y])).collect())
        .collect();
    let (image, perms) =
        FiniteGroup::from_permutations(x.order(), &phi).expect("automorphisms are permutations");
    let index: HashMap<&Vec<usize>, usize> = perms.iter().enumerate().map(|(i, q)| (q, i)).collect();
    let image_index: Vec<usize> = phi.iter().map(|q| index[q]).collect();
    let action = x.elements().map(|z| perms.iter().map(|q| q[z]).collect()).collect();
    let reduced = validate_precrossed(x.clone(), image.clone(), action, image_index.clone())
        .expect("the pre-crossed action is itself pre-crossed");
    PreCrossedAction { phi, image, image_index, reduced }
}
