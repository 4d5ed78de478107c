use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// Everything needed to rerun a verdict.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scale {
    pub p: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_word_len: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub star_len_bound: Option<usize>,
    pub budget: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub format: u32,
    pub command: String,
    pub quiver: String,
    pub scale: Scale,
    pub verdict: Verdict,
    pub lines: Vec<String>,
    pub witnesses: Vec<String>,
    pub caveats: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>, quiver: impl Into<String>, scale: Scale) -> Self {
        Report {
            format: crate::files::FORMAT,
            command: command.into(),
            quiver: quiver.into(),
            scale,
            verdict: Verdict::Pass,
            lines: Vec::new(),
            witnesses: Vec::new(),
            caveats: Vec::new(),
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn witness(&mut self, s: impl Into<String>) {
        self.witnesses.push(s.into());
    }

    pub fn caveat(&mut self, s: impl Into<String>) {
        let s = s.into();
        if !self.caveats.contains(&s) {
            self.caveats.push(s);
        }
    }

    pub fn fail_if(&mut self, bad: bool) {
        if bad {
            self.verdict = Verdict::Fail;
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let s = &self.scale;
        let _ = write!(out, "{} on {} (p={}", self.command, self.quiver, s.p);
        if let Some(d) = s.max_dim {
            let _ = write!(out, ", dim<={d}");
        }
        if let Some(k) = s.max_word_len {
            let _ = write!(out, ", len<={k}");
        }
        if let Some(b) = s.star_len_bound {
            let _ = write!(out, ", star<={b}");
        }
        let _ = writeln!(out, ", budget={})", s.budget);
        for l in &self.lines {
            let _ = writeln!(out, "  {l}");
        }
        for w in &self.witnesses {
            let _ = writeln!(out, "  witness: {w}");
        }
        for c in &self.caveats {
            let _ = writeln!(out, "  caveat: {c}");
        }
        let _ = writeln!(
            out,
            "verdict: {}",
            match self.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
            }
        );
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}
