//! One function per subcommand, each producing a [`Report`].

use std::fmt;
use std::str::FromStr;

use prehom::algebra::{PreCrossedModule, Rack};
use prehom::homology::{
    homology_range, induced_map, simplicial_chains, Caps, ChainComplex, Coefficients, HomologyGroup,
};
use prehom::oracles::{group_homology, rack_complex, tensor_algebra_dims};
use prehom::simplicial::{
    build_clauwens, build_coskeleton, build_envelope, build_nerve, canonical_to_coskeleton, EnvelopeSource,
    SimplicialMap, SimplicialSet,
};
use prehom::words::WordMode;

use crate::error::CliError;
use crate::input::{Object, Registry};
use crate::report::{Report, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pipeline {
    Envelope,
    Clauwens,
    RackComplex,
    Coskeleton,
    Nerve,
}

impl Pipeline {
    /// Whether `max_length` affects the computation.
    pub fn truncates(self) -> bool {
        matches!(self, Pipeline::Envelope | Pipeline::Clauwens)
    }
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pipeline::Envelope => "envelope",
            Pipeline::Clauwens => "clauwens",
            Pipeline::RackComplex => "rackcomplex",
            Pipeline::Coskeleton => "coskeleton",
            Pipeline::Nerve => "nerve",
        })
    }
}

impl FromStr for Pipeline {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "envelope" => Ok(Pipeline::Envelope),
            "clauwens" => Ok(Pipeline::Clauwens),
            "rackcomplex" => Ok(Pipeline::RackComplex),
            "coskeleton" => Ok(Pipeline::Coskeleton),
            "nerve" => Ok(Pipeline::Nerve),
            _ => Err(format!("unknown pipeline `{s}` (expected envelope, clauwens, rackcomplex, coskeleton or nerve)")),
        }
    }
}

/// `2,3,4` or the inclusive range `2..4`; strictly increasing.
pub fn parse_lengths(s: &str) -> Result<Vec<usize>, String> {
    let bad = || format!("invalid length list `{s}` (expected e.g. `2,3` or `1..3`)");
    let lengths: Vec<usize> = if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        (a..=b).collect()
    } else {
        s.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?
    };
    if lengths.is_empty() || lengths.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bad());
    }
    Ok(lengths)
}

fn lookup<'r>(registry: &'r Registry, name: &str) -> Result<&'r Object, CliError> {
    registry.get(name).ok_or_else(|| CliError::UnknownObject(name.to_string()))
}

fn incompatible(object: &Object, name: &str, what: impl Into<String>) -> CliError {
    CliError::Incompatible { object: object.kind(), name: name.to_string(), what: what.into() }
}

fn chains<S: SimplicialSet>(spec: &S, top: usize, l: usize, caps: Caps) -> Result<ChainComplex, CliError> {
    Ok(simplicial_chains(spec, top, l, caps)?.complex)
}

fn rack_chains(rack: &Rack, top: usize, caps: Caps) -> Result<ChainComplex, CliError> {
    let dim = u32::try_from(top).ok().and_then(|t| rack.size().checked_pow(t));
    match dim {
        Some(d) if d <= caps.matrix_dim => Ok(rack_complex(rack, top)?),
        _ => Err(prehom::Error::ResourceBound {
            what: format!("rack complex in degree {top}"),
            count: dim.unwrap_or(usize::MAX),
            cap: caps.matrix_dim,
        }
        .into()),
    }
}

/// The chain complex of `object` through `pipeline`, in degrees `0..=top`.
fn complex(
    object: &Object,
    name: &str,
    pipeline: Pipeline,
    top: usize,
    l: usize,
    caps: Caps,
) -> Result<ChainComplex, CliError> {
    match (pipeline, object) {
        (Pipeline::Envelope, Object::PreCrossed { module, .. }) => {
            chains(&build_envelope(EnvelopeSource::PreCrossed(module), WordMode::GroupSyllable)?, top, l, caps)
        }
        (Pipeline::Envelope, Object::AugRack { rack, .. }) => {
            chains(&build_envelope(EnvelopeSource::AugmentedRack(rack), WordMode::FreeLetter)?, top, l, caps)
        }
        (Pipeline::Clauwens, Object::AugRack { rack, .. }) => chains(&build_clauwens(rack), top, l, caps),
        (Pipeline::Clauwens, Object::PreCrossed { module, .. }) => {
            chains(&build_clauwens(&module.as_augmented_rack()), top, l, caps)
        }
        (Pipeline::RackComplex, Object::Rack { rack, .. }) => rack_chains(rack, top, caps),
        (Pipeline::RackComplex, Object::AugRack { rack, .. }) => rack_chains(rack.rack(), top, caps),
        (Pipeline::RackComplex, Object::PreCrossed { module, .. }) => {
            rack_chains(module.as_augmented_rack().rack(), top, caps)
        }
        (Pipeline::Coskeleton, Object::PreCrossed { module, .. }) => chains(&build_coskeleton(module), top, l, caps),
        (Pipeline::Nerve, Object::Group(g)) => chains(&build_nerve(g), top, l, caps),
        (Pipeline::Nerve, Object::AugRack { rack, .. }) => chains(&build_nerve(rack.group()), top, l, caps),
        (Pipeline::Nerve, Object::PreCrossed { module, .. }) => chains(&build_nerve(module.group()), top, l, caps),
        _ => Err(incompatible(object, name, format!("pipeline {pipeline}"))),
    }
}

fn empty_basis_warnings(report: &mut Report, c: &ChainComplex, degrees: impl Iterator<Item = usize>, l: usize) {
    for m in degrees {
        if c.dim(m) == 0 {
            report.warn(format!("degree {m} basis is empty at max-length {l}; H_{m} = 0 is a truncation artifact"));
        }
    }
}

pub fn validate(registry: &Registry, file: &str) -> Report {
    let mut r = Report::new(format!("validate {file}"));
    for (name, object) in registry.iter() {
        let line = match object {
            Object::Group(g) => format!(
                "group {name}: order {}, {}",
                g.order(),
                if g.is_abelian() { "abelian" } else { "non-abelian" }
            ),
            Object::Rack { rack, .. } => format!(
                "rack {name}: {} elements{}",
                rack.size(),
                if rack.is_trivial() { ", trivial" } else { "" }
            ),
            Object::AugRack { group, rack } => {
                format!("augrack {name}: {} elements over {group} (order {})", rack.carrier_size(), rack.group().order())
            }
            Object::PreCrossed { x, g, module } => format!(
                "precrossed {name}: {x} (order {}) -> {g} (order {}), pi {}",
                module.x_group().order(),
                module.group().order(),
                if module.is_surjective() { "surjective" } else { "not surjective" }
            ),
        };
        r.line(line);
    }
    r.line(format!("{} object(s) valid", registry.len()));
    r
}

#[allow(clippy::too_many_arguments)]
pub fn homology(
    registry: &Registry,
    file: &str,
    name: &str,
    pipeline: Pipeline,
    m_max: usize,
    l: usize,
    coeff: Coefficients,
    caps: Caps,
) -> Result<Report, CliError> {
    let object = lookup(registry, name)?;
    let mut r = Report::new(format!(
        "homology {file} --object {name} --pipeline {pipeline} --max-degree {m_max} --max-length {l} --coeff {coeff} --cap {}",
        caps.simplices
    ));
    let c = complex(object, name, pipeline, m_max + 1, l, caps)?;
    for h in homology_range(&c, m_max, coeff)? {
        r.line(h.to_string());
        r.machine.push(h.machine_line());
    }
    if pipeline.truncates() {
        empty_basis_warnings(&mut r, &c, 0..=m_max, l);
    } else {
        r.line(format!("max-length {l} unused: pipeline {pipeline} is not truncated"));
    }
    Ok(r)
}

fn cell(h: &HomologyGroup) -> String {
    h.group_string()
}

pub fn compare_ra(
    registry: &Registry,
    file: &str,
    name: &str,
    m_max: usize,
    l: usize,
    caps: Caps,
) -> Result<Report, CliError> {
    let object = lookup(registry, name)?;
    if !matches!(object, Object::AugRack { .. } | Object::PreCrossed { .. }) {
        return Err(incompatible(object, name, "compare-ra (needs an augmented rack)"));
    }
    let mut r =
        Report::new(format!("compare-ra {file} --object {name} --max-degree {m_max} --max-length {l}"));
    let pipelines = [Pipeline::Envelope, Pipeline::Clauwens, Pipeline::RackComplex];
    let mut results = Vec::new();
    for p in pipelines {
        // On a pre-crossed module the envelope pipeline would use group
        // syllables; the comparison is about F(X) → G.
        let c = match (p, object) {
            (Pipeline::Envelope, Object::PreCrossed { module, .. }) => chains(
                &build_envelope(EnvelopeSource::AugmentedRack(&module.as_augmented_rack()), WordMode::FreeLetter)?,
                m_max + 1,
                l,
                caps,
            )?,
            _ => complex(object, name, p, m_max + 1, l, caps)?,
        };
        if p.truncates() {
            empty_basis_warnings(&mut r, &c, 0..=m_max, l);
        }
        results.push(homology_range(&c, m_max, Coefficients::Integers)?);
    }
    r.line("degree  envelope(free)  clauwens  rackcomplex");
    let mut agree = true;
    for m in 0..=m_max {
        let row: Vec<&HomologyGroup> = results.iter().map(|h| &h[m]).collect();
        let same = row.windows(2).all(|w| w[0].same_group(w[1]));
        agree &= same;
        r.line(format!(
            "H_{m}  {}  {}  {}  {}",
            cell(row[0]),
            cell(row[1]),
            cell(row[2]),
            if same { "agree" } else { "DIFFER" }
        ));
        for (p, h) in pipelines.iter().zip(&row) {
            r.machine.push(format!("{p};{}", h.machine_line()));
        }
    }
    r.verdict = Some(if agree { Verdict::Agree } else { Verdict::Disagree });
    Ok(r)
}

pub fn check_tri(
    registry: &Registry,
    file: &str,
    name: &str,
    m_max: usize,
    coeff: Coefficients,
    lengths: &[usize],
    caps: Caps,
) -> Result<Report, CliError> {
    let object = lookup(registry, name)?;
    let lengths_echo = lengths.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    let mut r = Report::new(format!(
        "check-tri {file} --object {name} --max-degree {m_max} --coeff {coeff} --lengths {lengths_echo}"
    ));
    if !coeff.is_field() {
        return Err(CliError::Usage(format!("check-tri needs field coefficients, got {coeff}")));
    }
    let p = match object {
        Object::Group(x) => PreCrossedModule::over_trivial_group(x),
        Object::PreCrossed { module, .. } if module.group().is_trivial() => module.clone(),
        _ => return Err(incompatible(object, name, "check-tri (needs a group X, or X -> 1)")),
    };
    let x = p.x_group();
    let generators: Vec<(usize, u64)> = (1..=m_max)
        .map(|k| Ok((k, group_homology(x, k, coeff)?.betti as u64)))
        .collect::<Result<_, CliError>>()?;
    let expected: Vec<u128> = (0..=m_max).map(|m| tensor_algebra_dims(&generators, m)).collect();
    r.line(format!(
        "generators (dim H_k(X; {coeff}), k = 1..{m_max}): {}",
        generators.iter().map(|g| g.1.to_string()).collect::<Vec<_>>().join(" ")
    ));
    r.line(format!("expected (tensor algebra): {}", join(&expected)));

    let spec = build_envelope(EnvelopeSource::PreCrossed(&p), WordMode::GroupSyllable)?;
    let mut table: Vec<Vec<usize>> = Vec::new();
    let mut agree = true;
    let mut covered = vec![false; m_max + 1];
    for &l in lengths {
        let c = chains(&spec, m_max + 1, l, caps)?;
        let betti: Vec<usize> = homology_range(&c, m_max, coeff)?.iter().map(|h| h.betti).collect();
        let cells: Vec<String> = (0..=m_max)
            .map(|m| {
                if m < l {
                    covered[m] = true;
                    let ok = betti[m] as u128 == expected[m];
                    agree &= ok;
                    format!("{}{}", betti[m], if ok { "" } else { "!" })
                } else {
                    format!("({})", betti[m])
                }
            })
            .collect();
        r.line(format!("L={l}: {}", cells.join(" ")));
        for m in 0..=m_max {
            r.machine.push(format!("{l};{m};{coeff};{};{}", betti[m], expected[m]));
        }
        table.push(betti);
    }
    r.line("values in parentheses have L < m + 1 and are not compared; `!` marks a mismatch");
    r.line(format!("stabilization: {}", stabilization(lengths, &table, m_max)));
    let uncovered: Vec<String> = (0..=m_max).filter(|&m| !covered[m]).map(|m| m.to_string()).collect();
    if !uncovered.is_empty() {
        r.warn(format!("degrees {} need max-length >= m + 1; none of the lengths reaches it", uncovered.join(",")));
    }
    r.verdict = Some(match (agree, uncovered.is_empty()) {
        (false, _) => Verdict::Disagree,
        (true, true) => Verdict::Agree,
        (true, false) => Verdict::NotApplicable,
    });
    Ok(r)
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Per degree, the first listed length from which the value stays constant.
fn stabilization(lengths: &[usize], table: &[Vec<usize>], m_max: usize) -> String {
    (0..=m_max)
        .map(|m| {
            let last = table.last().map(|row| row[m]);
            let from = (0..table.len()).find(|&i| table[i..].iter().all(|row| Some(row[m]) == last));
            match from {
                Some(i) if i + 1 < table.len() => format!("m={m} from L={}", lengths[i]),
                _ => format!("m={m} unknown"),
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn check_coskeleton(
    registry: &Registry,
    file: &str,
    name: &str,
    m_max: usize,
    caps: Caps,
) -> Result<Report, CliError> {
    let object = lookup(registry, name)?;
    let Object::PreCrossed { module, .. } = object else {
        return Err(incompatible(object, name, "check-coskeleton (needs a pre-crossed module)"));
    };
    let l = m_max + 1;
    let mut r = Report::new(format!("check-coskeleton {file} --object {name} --max-degree {m_max} --max-length {l}"));
    let p = if module.is_surjective() {
        module.clone()
    } else {
        let p = module.restrict_to_image();
        r.line(format!("pi not surjective: G replaced by its image (order {})", p.group().order()));
        p
    };
    let target = simplicial_chains(&build_coskeleton(&p), m_max + 1, l, caps)?;
    let cosk = homology_range(&target.complex, m_max, Coefficients::Integers)?;
    let nerve = homology_range(&chains(&build_nerve(p.group()), m_max + 1, l, caps)?, m_max, Coefficients::Integers)?;
    let mut agree = true;
    for m in 0..=m_max {
        let same = cosk[m].same_group(&nerve[m]);
        agree &= same;
        r.line(format!(
            "H_{m}  M/G = {}  BG = {}  {}",
            cosk[m].group_string(),
            nerve[m].group_string(),
            if same { "agree" } else { "DIFFER" }
        ));
        r.machine.push(format!("coskeleton;{}", cosk[m].machine_line()));
        r.machine.push(format!("nerve;{}", nerve[m].machine_line()));
    }

    let f = canonical_to_coskeleton(&p);
    let source = simplicial_chains(f.source(), m_max + 1, l, caps)?;
    for m in 0..=m_max {
        let map = induced_map(&f, &source, &target, m)?;
        let iso = map.is_isomorphism();
        if m == 0 {
            agree &= iso;
        }
        r.line(format!(
            "induced H_{m}: {} -> {}  matrix {}  {}",
            map.source.group_string(),
            map.target.group_string(),
            map.matrix_string(),
            if iso { "isomorphism" } else { "not an isomorphism" }
        ));
    }
    r.verdict = Some(if agree { Verdict::Agree } else { Verdict::Disagree });
    Ok(r)
}

#[allow(clippy::too_many_arguments)]
pub fn sweep(
    registry: &Registry,
    file: &str,
    name: &str,
    pipeline: Pipeline,
    m: usize,
    lengths: &[usize],
    coeff: Coefficients,
    caps: Caps,
) -> Result<Report, CliError> {
    let object = lookup(registry, name)?;
    let lengths_echo = match lengths {
        [a, .., b] if lengths.windows(2).all(|w| w[1] == w[0] + 1) => format!("{a}..{b}"),
        _ => lengths.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
    };
    let mut r = Report::new(format!(
        "sweep {file} --object {name} --pipeline {pipeline} --degree {m} --lengths {lengths_echo} --coeff {coeff}"
    ));
    let mut values: Vec<HomologyGroup> = Vec::new();
    for &l in lengths {
        let c = complex(object, name, pipeline, m + 1, l, caps)?;
        let h = homology_range(&c, m, coeff)?.pop().expect("degree m computed");
        let empty = c.dim(m) == 0;
        r.line(format!("L={l}  {h}{}", if empty { "  (empty basis)" } else { "" }));
        if empty {
            r.warn(format!("degree {m} basis is empty at max-length {l}; H_{m} = 0 is a truncation artifact"));
        }
        r.machine.push(format!("{l};{}", h.machine_line()));
        values.push(h);
    }
    match (1..values.len()).find(|&i| values[i] == values[i - 1]) {
        Some(i) => r.line(format!("stabilizes at L={} with {}", lengths[i - 1], values[i].group_string())),
        None => r.line("no two consecutive lengths agree"),
    }
    if !pipeline.truncates() {
        r.line(format!("pipeline {pipeline} is not truncated; the values are independent of L"));
    }
    Ok(r)
}
