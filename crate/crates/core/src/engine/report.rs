use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Line {
    Check {
        name: String,
        detail: String,
        status: Status,
    },
    Note(String),
}

/// Line-oriented verification output: `name key=value ... PASS|FAIL`, with
/// `# ` comment lines for explanations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<Line>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, name: impl Into<String>, detail: impl Into<String>, ok: bool) -> bool {
        self.lines.push(Line::Check {
            name: name.into(),
            detail: detail.into(),
            status: if ok { Status::Pass } else { Status::Fail },
        });
        ok
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.lines.push(Line::Note(text.into()));
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn checks(&self) -> impl Iterator<Item = (&str, &str, Status)> {
        self.lines.iter().filter_map(|l| match l {
            Line::Check {
                name,
                detail,
                status,
            } => Some((name.as_str(), detail.as_str(), *status)),
            Line::Note(_) => None,
        })
    }

    pub fn passed(&self) -> bool {
        self.checks().all(|(_, _, s)| s == Status::Pass)
    }

    pub fn num_checks(&self) -> usize {
        self.checks().count()
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks()
            .filter(|(_, _, s)| *s == Status::Fail)
            .map(|(n, d, _)| format!("{n} {d}"))
            .collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            match line {
                Line::Check {
                    name,
                    detail,
                    status,
                } => {
                    let s = match status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                    };
                    if detail.is_empty() {
                        writeln!(f, "{name} {s}")?;
                    } else {
                        writeln!(f, "{name} {detail} {s}")?;
                    }
                }
                Line::Note(text) => writeln!(f, "# {text}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_and_status() {
        let mut r = Report::new();
        r.check("check_presentation", "n=4 lhs=339 rhs=339", true);
        r.note("hello");
        assert!(r.passed());
        assert_eq!(
            r.to_string(),
            "check_presentation n=4 lhs=339 rhs=339 PASS\n# hello\n"
        );
        r.check("other", "", false);
        assert!(!r.passed());
        assert_eq!(r.failures(), ["other "]);
        assert!(r.to_string().ends_with("other FAIL\n"));
    }
}
