use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Agree,
    Disagree,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Agree => "AGREE",
            Verdict::Disagree => "DISAGREE",
            Verdict::NotApplicable => "N/A",
        })
    }
}

/// Output of one command. Rendering is deterministic; timing is reported
/// separately by the binary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    /// Command echo including every truncation parameter.
    pub header: String,
    pub lines: Vec<String>,
    pub warnings: Vec<String>,
    pub verdict: Option<Verdict>,
    /// Lines emitted alone under `--machine`.
    pub machine: Vec<String>,
}

impl Report {
    pub fn new(header: String) -> Self {
        Self { header, lines: Vec::new(), warnings: Vec::new(), verdict: None, machine: Vec::new() }
    }

    pub fn line(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    pub fn warn(&mut self, warning: impl Into<String>) {
        self.warnings.push(warning.into());
    }

    pub fn render(&self) -> String {
        let mut out = format!("# {}\n", self.header);
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        for w in &self.warnings {
            out.push_str("warning: ");
            out.push_str(w);
            out.push('\n');
        }
        if let Some(v) = self.verdict {
            out.push_str(&format!("verdict: {v}\n"));
        }
        out
    }

    pub fn render_machine(&self) -> String {
        self.machine.iter().map(|l| format!("{l}\n")).collect()
    }

    /// 0 unless the verdict is DISAGREE.
    pub fn exit_code(&self) -> u8 {
        if self.verdict == Some(Verdict::Disagree) {
            2
        } else {
            0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        let mut r = Report::new("homology object=A".into());
        r.line("H_0 = Z");
        r.warn("empty basis");
        r.verdict = Some(Verdict::Disagree);
        assert_eq!(r.render(), "# homology object=A\nH_0 = Z\nwarning: empty basis\nverdict: DISAGREE\n");
        assert_eq!(r.exit_code(), 2);
    }
}
