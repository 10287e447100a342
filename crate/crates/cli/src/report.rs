use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    #[value(alias = "markdown")]
    Md,
}

/// Positional arguments, in command-line order.
const POSITIONAL: [&str; 2] = ["kind", "input"];

/// Everything needed to reproduce a run; echoed at the top of each report.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub args: BTreeMap<String, String>,
    pub seed: u64,
    pub format: Format,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
}

impl RunConfig {
    /// The equivalent command line.
    pub fn command_line(&self) -> String {
        let mut line = format!("weylcontact {}", self.command);
        for key in POSITIONAL {
            if let Some(v) = self.args.get(key) {
                write!(line, " {v}").unwrap();
            }
        }
        for (k, v) in self.args.iter().filter(|(k, _)| !POSITIONAL.contains(&k.as_str())) {
            write!(line, " --{k} {v}").unwrap();
        }
        let fmt = match self.format {
            Format::Json => "json",
            Format::Md => "md",
        };
        write!(line, " --seed {} --format {fmt}", self.seed).unwrap();
        line
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(label: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { label: label.into(), pass, detail: detail.into() }
    }
}

#[derive(Serialize)]
pub struct Report<T: Serialize> {
    pub title: String,
    pub config: RunConfig,
    pub verdict: bool,
    pub checks: Vec<Check>,
    pub data: T,
}

impl<T: Serialize> Report<T> {
    pub fn new(title: impl Into<String>, config: RunConfig, checks: Vec<Check>, data: T) -> Self {
        let verdict = checks.iter().all(|c| c.pass);
        Report { title: title.into(), config, verdict, checks, data }
    }

    pub fn render(&self) -> serde_json::Result<String> {
        match self.config.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self)?;
                s.push('\n');
                Ok(s)
            }
            Format::Md => self.markdown(),
        }
    }

    fn markdown(&self) -> serde_json::Result<String> {
        let mut md = String::new();
        writeln!(md, "# {}\n", self.title).unwrap();
        writeln!(md, "Verdict: **{}**\n", if self.verdict { "PASS" } else { "FAIL" }).unwrap();
        writeln!(md, "## Run\n\n```\n{}\n```\n", self.config.command_line()).unwrap();
        if let Some(t) = self.config.threads {
            writeln!(md, "Worker threads: {t}\n").unwrap();
        }
        writeln!(md, "## Checks\n\n| check | result | detail |\n|---|---|---|").unwrap();
        for c in &self.checks {
            let detail = c.detail.replace('|', "\\|");
            writeln!(md, "| {} | {} | {} |", c.label, if c.pass { "pass" } else { "FAIL" }, detail).unwrap();
        }
        writeln!(md, "\n## Data\n\n```json\n{}\n```", serde_json::to_string_pretty(&self.data)?).unwrap();
        Ok(md)
    }
}

/// Write through a temporary file in the target directory, then rename.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
