//! The line-oriented input format.
//!
//! ```text
//! # comments run to the end of the line
//! group Z2
//!   elements: e, t
//!   table: 0,1 / 1,0
//!
//! group S3
//!   permutations: 1,0,2 / 1,2,0
//!
//! augrack T
//!   group: S3
//!   subset: p021, p102, p210
//!
//! precrossed P { x = Z2; g = Z2; pi = id; action = trivial }
//! ```
//!
//! Tables are rows of element indices separated by `/`. Maps (`pi`) and
//! subsets name elements by label. Objects must be declared before they are
//! referenced.

use std::fmt::Write as _;

use prehom::algebra::{
    conjugation_structure, validate_augmented_rack, validate_precrossed, validate_rack, AlgebraError, AugmentedRack,
    FiniteGroup, PreCrossedModule, Rack,
};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("line {line}: {kind} `{name}` is invalid: {source}")]
    Validation {
        line: usize,
        kind: &'static str,
        name: String,
        #[source]
        source: AlgebraError,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Group(FiniteGroup),
    Rack { labels: Vec<String>, rack: Rack },
    AugRack { group: String, rack: AugmentedRack },
    PreCrossed { x: String, g: String, module: PreCrossedModule },
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Group(_) => "group",
            Object::Rack { .. } => "rack",
            Object::AugRack { .. } => "augrack",
            Object::PreCrossed { .. } => "precrossed",
        }
    }
}

/// Validated objects in declaration order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Registry {
    objects: Vec<(String, Object)>,
}

impl Registry {
    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Object)> {
        self.objects.iter().map(|(n, o)| (n.as_str(), o))
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// Adds an object, rejecting duplicate names.
    pub fn insert(&mut self, name: String, object: Object) -> bool {
        if self.get(&name).is_some() {
            return false;
        }
        self.objects.push((name, object));
        true
    }

    /// Canonical text form; `parse_str(&r.to_text())` reproduces `r`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, (name, obj)) in self.objects.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "{} {name}", obj.kind());
            match obj {
                Object::Group(g) => {
                    let _ = writeln!(out, "  elements: {}", g.labels().join(", "));
                    let _ = writeln!(out, "  table: {}", rows(g.table()));
                }
                Object::Rack { labels, rack } => {
                    let _ = writeln!(out, "  elements: {}", labels.join(", "));
                    let _ = writeln!(out, "  table: {}", rows(rack.table()));
                }
                Object::AugRack { group, rack } => {
                    let g = rack.group();
                    let _ = writeln!(out, "  group: {group}");
                    let _ = writeln!(out, "  elements: {}", rack.labels().join(", "));
                    let map: Vec<String> = rack
                        .labels()
                        .iter()
                        .zip(rack.pi_table())
                        .map(|(x, &p)| format!("{x} -> {}", g.label(p)))
                        .collect();
                    let _ = writeln!(out, "  pi: {}", map.join(", "));
                    let _ = writeln!(out, "  action: {}", rows(rack.action().table()));
                }
                Object::PreCrossed { x, g, module } => {
                    let _ = writeln!(out, "  x: {x}");
                    let _ = writeln!(out, "  g: {g}");
                    let map: Vec<String> = module
                        .x_group()
                        .elements()
                        .map(|a| format!("{} -> {}", module.x_group().label(a), module.group().label(module.pi(a))))
                        .collect();
                    let _ = writeln!(out, "  pi: {}", map.join(", "));
                    let _ = writeln!(out, "  action: {}", rows(module.action().table()));
                }
            }
        }
        out
    }
}

fn rows(table: &[Vec<usize>]) -> String {
    table
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(" / ")
}

/// A piece of input text with its 1-based position.
#[derive(Clone, Copy, Debug)]
struct Span<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl<'a> Span<'a> {
    fn trimmed(self) -> Span<'a> {
        let lead = self.text.len() - self.text.trim_start().len();
        Span { text: self.text.trim(), line: self.line, column: self.column + self.text[..lead].chars().count() }
    }

    fn split(self, sep: &str) -> Vec<Span<'a>> {
        let mut out = Vec::new();
        let mut column = self.column;
        for piece in self.text.split(sep) {
            out.push(Span { text: piece, line: self.line, column }.trimmed());
            column += piece.chars().count() + sep.chars().count();
        }
        out
    }

    /// Splits at the first occurrence of any of `seps`.
    fn split_once_any(self, seps: &[char]) -> Option<(Span<'a>, Span<'a>)> {
        let at = self.text.find(seps)?;
        let sep_len = self.text[at..].chars().next().map_or(1, char::len_utf8);
        let head = Span { text: &self.text[..at], line: self.line, column: self.column };
        let tail = Span {
            text: &self.text[at + sep_len..],
            line: self.line,
            column: self.column + self.text[..at + sep_len].chars().count(),
        };
        Some((head.trimmed(), tail.trimmed()))
    }

    fn error(self, message: impl Into<String>) -> InputError {
        InputError::Parse { line: self.line, column: self.column, message: message.into() }
    }
}

struct Block<'a> {
    kind: Span<'a>,
    name: Span<'a>,
    entries: Vec<(Span<'a>, Span<'a>)>,
}

impl<'a> Block<'a> {
    fn check_keys(&self, allowed: &[&str]) -> Result<(), InputError> {
        for (i, (key, _)) in self.entries.iter().enumerate() {
            if !allowed.contains(&key.text) {
                return Err(key.error(format!(
                    "unknown key `{}` for {} (expected one of: {})",
                    key.text,
                    self.kind.text,
                    allowed.join(", ")
                )));
            }
            if self.entries[..i].iter().any(|(k, _)| k.text == key.text) {
                return Err(key.error(format!("duplicate key `{}`", key.text)));
            }
        }
        Ok(())
    }

    fn get(&self, key: &str) -> Option<Span<'a>> {
        self.entries.iter().find(|(k, _)| k.text == key).map(|&(_, v)| v)
    }

    fn require(&self, key: &str) -> Result<Span<'a>, InputError> {
        self.get(key).ok_or_else(|| self.name.error(format!("{} `{}` is missing `{key}`", self.kind.text, self.name.text)))
    }

    fn invalid(&self, kind: &'static str, source: AlgebraError) -> InputError {
        InputError::Validation { line: self.name.line, kind, name: self.name.text.to_string(), source }
    }
}

fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || matches!(c, '_' | '.' | '\'' | '^' | '+' | '*'))
}

fn strip_comment(line: &str) -> &str {
    line.find('#').map_or(line, |i| &line[..i])
}

/// Splits the text into blocks, handling both the indented and the brace
/// form.
fn blocks(text: &str) -> Result<Vec<Block<'_>>, InputError> {
    let mut out: Vec<Block> = Vec::new();
    let mut in_brace = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = Span { text: strip_comment(raw), line: idx + 1, column: 1 };
        if line.text.trim().is_empty() {
            continue;
        }
        if in_brace {
            in_brace = brace_entries(line, out.last_mut().expect("open block"))?;
            continue;
        }
        if line.text.starts_with([' ', '\t']) {
            let Some(block) = out.last_mut() else {
                return Err(line.trimmed().error("indented entry outside of a block"));
            };
            let entry = line.trimmed();
            let (key, value) =
                entry.split_once_any(&[':', '=']).ok_or_else(|| entry.error("expected `key: value`"))?;
            block.entries.push((key, value));
            continue;
        }
        let (header, rest) = match line.text.find('{') {
            Some(at) => (
                Span { text: &line.text[..at], ..line },
                Some(Span { text: &line.text[at + 1..], line: line.line, column: line.text[..at].chars().count() + 2 }),
            ),
            None => (line, None),
        };
        let words: Vec<Span> = header.trimmed().split(" ").into_iter().filter(|w| !w.text.is_empty()).collect();
        let [kind, name] = words[..] else {
            return Err(header.trimmed().error("expected a declaration `KIND NAME`"));
        };
        if !matches!(kind.text, "group" | "rack" | "augrack" | "precrossed") {
            return Err(kind.error(format!(
                "unknown declaration `{}` (expected group, rack, augrack or precrossed)",
                kind.text
            )));
        }
        if !is_identifier(name.text) {
            return Err(name.error(format!("invalid name `{}`", name.text)));
        }
        out.push(Block { kind, name, entries: Vec::new() });
        if let Some(rest) = rest {
            in_brace = brace_entries(rest, out.last_mut().expect("just pushed"))?;
        }
    }
    if in_brace {
        let b = out.last().expect("open block");
        return Err(b.name.error(format!("unclosed `{{` in declaration of `{}`", b.name.text)));
    }
    Ok(out)
}

/// Parses `key = value; ...` up to an optional `}`; returns whether the
/// brace is still open.
fn brace_entries<'a>(span: Span<'a>, block: &mut Block<'a>) -> Result<bool, InputError> {
    let (body, open) = match span.text.find('}') {
        Some(at) => {
            let after = Span {
                text: &span.text[at + 1..],
                line: span.line,
                column: span.column + span.text[..at + 1].chars().count(),
            };
            if !after.text.trim().is_empty() {
                return Err(after.trimmed().error("unexpected text after `}`"));
            }
            (Span { text: &span.text[..at], ..span }, false)
        }
        None => (span, true),
    };
    for entry in body.split(";") {
        if entry.text.is_empty() {
            continue;
        }
        let (key, value) = entry.split_once_any(&['=', ':']).ok_or_else(|| entry.error("expected `key = value`"))?;
        block.entries.push((key, value));
    }
    Ok(open)
}

fn parse_usize(span: Span) -> Result<usize, InputError> {
    span.text.parse().map_err(|_| span.error(format!("expected a non-negative integer, found `{}`", span.text)))
}

/// `a,b,c / d,e,f` as index rows.
fn index_table(span: Span) -> Result<Vec<Vec<usize>>, InputError> {
    if span.text.is_empty() {
        return Ok(Vec::new());
    }
    span.split("/").into_iter().map(|row| row.split(",").into_iter().map(parse_usize).collect()).collect()
}

fn label_list(span: Span) -> Result<Vec<String>, InputError> {
    let mut labels: Vec<String> = Vec::new();
    for item in span.split(",") {
        if !is_identifier(item.text) {
            return Err(item.error(format!("invalid element label `{}`", item.text)));
        }
        if labels.iter().any(|l| l == item.text) {
            return Err(item.error(format!("duplicate element label `{}`", item.text)));
        }
        labels.push(item.text.to_string());
    }
    Ok(labels)
}

/// An element named by label, or by index when no label matches.
fn resolve(span: Span, labels: &[String], what: &str) -> Result<usize, InputError> {
    labels
        .iter()
        .position(|l| l == span.text)
        .or_else(|| span.text.parse::<usize>().ok().filter(|&i| i < labels.len()))
        .ok_or_else(|| span.error(format!("unknown element `{}` of {what}", span.text)))
}

/// `a -> t, b -> e`, total on `domain`.
fn parse_map(span: Span, domain: &[String], codomain: &[String]) -> Result<Vec<usize>, InputError> {
    let mut image = vec![None; domain.len()];
    for item in span.split(",") {
        let parts = item.split("->");
        let [from, to] = parts[..] else {
            return Err(item.error(format!("expected `x -> g`, found `{}`", item.text)));
        };
        let x = resolve(from, domain, "the carrier")?;
        if image[x].is_some() {
            return Err(from.error(format!("`{}` mapped twice", from.text)));
        }
        image[x] = Some(resolve(to, codomain, "the group")?);
    }
    image
        .iter()
        .enumerate()
        .map(|(x, g)| g.ok_or_else(|| span.error(format!("map does not assign `{}`", domain[x]))))
        .collect()
}

fn lookup_group<'r>(registry: &'r Registry, span: Span) -> Result<&'r FiniteGroup, InputError> {
    match registry.get(span.text) {
        Some(Object::Group(g)) => Ok(g),
        Some(other) => Err(span.error(format!("`{}` is a {}, expected a group", span.text, other.kind()))),
        None => Err(span.error(format!("undeclared group `{}`", span.text))),
    }
}

fn build_group(b: &Block) -> Result<FiniteGroup, InputError> {
    b.check_keys(&["elements", "table", "cyclic", "permutations"])?;
    let sources: Vec<&str> =
        ["table", "cyclic", "permutations"].into_iter().filter(|k| b.get(k).is_some()).collect();
    if sources.len() != 1 {
        return Err(b.name.error(format!(
            "group `{}` needs exactly one of `table`, `cyclic`, `permutations`",
            b.name.text
        )));
    }
    if let (Some(e), false) = (b.get("elements"), sources[0] == "table") {
        return Err(e.error("`elements` can only label an explicit `table`"));
    }
    let result = match sources[0] {
        "cyclic" => {
            let n = parse_usize(b.require("cyclic")?)?;
            if n == 0 {
                return Err(b.require("cyclic")?.error("cyclic group of order 0"));
            }
            Ok(FiniteGroup::cyclic(n))
        }
        "permutations" => {
            let gens = index_table(b.require("permutations")?)?;
            let degree = gens.first().map_or(0, Vec::len);
            FiniteGroup::from_permutations(degree, &gens).map(|(g, _)| g)
        }
        _ => {
            let labels = b.get("elements").map(label_list).transpose()?;
            FiniteGroup::from_table(labels, index_table(b.require("table")?)?)
        }
    };
    result.map_err(|e| b.invalid("group", e))
}

fn build_rack(b: &Block) -> Result<Object, InputError> {
    b.check_keys(&["elements", "table"])?;
    let table = index_table(b.require("table")?)?;
    let labels = match b.get("elements") {
        Some(e) => label_list(e)?,
        None => (0..table.len()).map(|i| i.to_string()).collect(),
    };
    if labels.len() != table.len() {
        return Err(b.invalid(
            "rack",
            AlgebraError::SizeMismatch { what: "rack labels", expected: table.len(), found: labels.len() },
        ));
    }
    let rack = validate_rack(table).map_err(|e| b.invalid("rack", e))?;
    Ok(Object::Rack { labels, rack })
}

/// Action table from `trivial`, `conjugation` (through `pi` into `group`) or
/// explicit rows.
fn action_table(span: Span, pi: &[usize], group: &FiniteGroup) -> Result<Vec<Vec<usize>>, InputError> {
    match span.text {
        "trivial" => Ok((0..pi.len()).map(|x| vec![x; group.order()]).collect()),
        "conjugation" => (0..pi.len())
            .map(|x| {
                group
                    .elements()
                    .map(|g| {
                        let target = group.conjugate(pi[x], g);
                        let mut hits = (0..pi.len()).filter(|&y| pi[y] == target);
                        match (hits.next(), hits.next()) {
                            (Some(y), None) => Ok(y),
                            _ => Err(span.error("`conjugation` needs pi to be injective with conjugation-closed image")),
                        }
                    })
                    .collect()
            })
            .collect(),
        _ => index_table(span),
    }
}

fn build_augrack(b: &Block, registry: &Registry) -> Result<Object, InputError> {
    b.check_keys(&["group", "subset", "elements", "pi", "action"])?;
    let group_span = b.require("group")?;
    let group = lookup_group(registry, group_span)?;
    let rack = if let Some(subset) = b.get("subset") {
        if let Some((k, _)) = b.entries.iter().find(|(k, _)| matches!(k.text, "elements" | "pi" | "action")) {
            return Err(k.error(format!("`{}` cannot be combined with `subset`", k.text)));
        }
        let members = subset
            .split(",")
            .into_iter()
            .map(|s| resolve(s, group.labels(), "the group"))
            .collect::<Result<Vec<_>, _>>()?;
        conjugation_structure(group, &members)
    } else {
        let labels = label_list(b.require("elements")?)?;
        let pi_span = b.require("pi")?;
        let pi = match pi_span.text {
            "trivial" => vec![group.identity(); labels.len()],
            _ => parse_map(pi_span, &labels, group.labels())?,
        };
        let action = action_table(b.require("action")?, &pi, group)?;
        validate_augmented_rack(labels, group.clone(), action, pi)
    };
    let rack = rack.map_err(|e| b.invalid("augrack", e))?;
    Ok(Object::AugRack { group: group_span.text.to_string(), rack })
}

fn build_precrossed(b: &Block, registry: &Registry) -> Result<Object, InputError> {
    b.check_keys(&["x", "g", "pi", "action"])?;
    let (x_span, g_span) = (b.require("x")?, b.require("g")?);
    let x = lookup_group(registry, x_span)?;
    let g = lookup_group(registry, g_span)?;
    let same = x.table() == g.table();
    let pi_span = b.require("pi")?;
    let pi = match pi_span.text {
        "id" if same => x.elements().collect(),
        "id" => return Err(pi_span.error("`pi = id` needs x and g to have the same multiplication table")),
        "trivial" => vec![g.identity(); x.order()],
        _ => parse_map(pi_span, x.labels(), g.labels())?,
    };
    let action_span = b.require("action")?;
    let action = match action_span.text {
        "trivial" => x.elements().map(|a| vec![a; g.order()]).collect(),
        "conjugation" if same => x.elements().map(|a| g.elements().map(|h| g.conjugate(a, h)).collect()).collect(),
        "conjugation" => {
            return Err(action_span.error("`action = conjugation` needs x and g to have the same multiplication table"))
        }
        _ => index_table(action_span)?,
    };
    let module = validate_precrossed(x.clone(), g.clone(), action, pi).map_err(|e| b.invalid("precrossed", e))?;
    Ok(Object::PreCrossed { x: x_span.text.to_string(), g: g_span.text.to_string(), module })
}

pub fn parse_str(text: &str) -> Result<Registry, InputError> {
    let mut registry = Registry::default();
    for b in blocks(text)? {
        let object = match b.kind.text {
            "group" => Object::Group(build_group(&b)?),
            "rack" => build_rack(&b)?,
            "augrack" => build_augrack(&b, &registry)?,
            _ => build_precrossed(&b, &registry)?,
        };
        if !registry.insert(b.name.text.to_string(), object) {
            return Err(b.name.error(format!("`{}` is declared twice", b.name.text)));
        }
    }
    Ok(registry)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_from_table() {
        let r = parse_str("group Z2\n  table: 0,1 / 1,0\n").unwrap();
        assert_eq!(r.len(), 1);
        assert!(matches!(r.get("Z2"), Some(Object::Group(g)) if g.order() == 2));
    }

    #[test]
    fn brace_form() {
        let r = parse_str("group Z2\n  cyclic: 2\nprecrossed P { x = Z2; g = Z2; pi = id; action = trivial }\n").unwrap();
        let Some(Object::PreCrossed { module, .. }) = r.get("P") else { panic!("missing P") };
        assert!(module.is_surjective());
    }

    #[test]
    fn brace_form_over_several_lines() {
        let text = "group Z2 { cyclic = 2 }\nprecrossed P {\n  x = Z2; g = Z2\n  pi = id; action = trivial\n}\n";
        assert!(matches!(parse_str(text).unwrap().get("P"), Some(Object::PreCrossed { .. })));
    }

    #[test]
    fn undeclared_identifier() {
        let err = parse_str("precrossed P { x = Z5; g = Z5; pi = id; action = trivial }").unwrap_err();
        assert_eq!(err, InputError::Parse { line: 1, column: 20, message: "undeclared group `Z5`".into() });
    }

    #[test]
    fn conjugation_subset() {
        let text = "group S3\n  permutations: 1,0,2 / 1,2,0\naugrack T\n  group: S3\n  subset: p021, p102, p210\n";
        let r = parse_str(text).unwrap();
        let Some(Object::AugRack { rack, .. }) = r.get("T") else { panic!() };
        assert_eq!(rack.carrier_size(), 3);
        assert!(!rack.rack().is_trivial());
    }

    #[test]
    fn explicit_augmented_rack() {
        let text = "group Z2\n  elements: e, t\n  table: 0,1 / 1,0\n\naugrack A  # one point\n  group: Z2\n  elements: a\n  pi: a -> t\n  action: trivial\n";
        let r = parse_str(text).unwrap();
        let Some(Object::AugRack { rack, .. }) = r.get("A") else { panic!() };
        assert_eq!(rack.pi(0), 1);
    }

    #[test]
    fn error_positions() {
        let err = parse_str("group Z2\n  tabel: 0,1 / 1,0\n").unwrap_err();
        assert!(matches!(err, InputError::Parse { line: 2, column: 3, .. }), "{err}");
        let err = parse_str("group Z2\n  table: 0,1 / 1,x\n").unwrap_err();
        assert!(matches!(err, InputError::Parse { line: 2, column: 18, .. }), "{err}");
        let err = parse_str("group G\n  table: 0,1 / 0,1\n").unwrap_err();
        assert!(matches!(err, InputError::Validation { line: 1, .. }), "{err}");
        assert!(parse_str("group A\n  cyclic: 2\ngroup A\n  cyclic: 3\n").is_err());
        assert!(parse_str("  table: 0\n").is_err());
        assert!(parse_str("monoid M\n").is_err());
    }

    #[test]
    fn map_must_be_total() {
        let text = "group Z2\n  cyclic: 2\naugrack A\n  group: Z2\n  elements: a, b\n  pi: a -> 1\n  action: trivial\n";
        let err = parse_str(text).unwrap_err();
        assert!(err.to_string().contains("does not assign `b`"), "{err}");
    }

    #[test]
    fn text_round_trip() {
        let text = "group S3\n  permutations: 1,0,2 / 1,2,0\naugrack T\n  group: S3\n  subset: p021, p102, p210\nprecrossed P { x = S3; g = S3; pi = id; action = conjugation }\nrack R\n  table: 0,0 / 1,1\n";
        let r = parse_str(text).unwrap();
        assert_eq!(parse_str(&r.to_text()).unwrap(), r);
    }
}
