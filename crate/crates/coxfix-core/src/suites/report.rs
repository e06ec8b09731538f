//! Check lines and reports emitted by the verification suites.

use std::time::Duration;

/// One verified fact: `PASS|FAIL <suite> <group> <theta> <params> [witness]`.
#[derive(Debug, Clone)]
pub struct CheckLine {
    pub suite: String,
    pub group: String,
    pub theta: String,
    pub params: String,
    pub check_id: String,
    pub pass: bool,
    pub witness: String,
}

impl CheckLine {
    pub fn stdout_line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {} {} {} {} {}",
            self.suite, self.group, self.theta, self.params, self.check_id
        );
        if !self.witness.is_empty() {
            line.push(' ');
            line.push_str(&self.witness);
        }
        line
    }

    /// TSV columns: suite, group, params, check-id, status, witness.
    pub fn tsv_line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.suite, self.group, self.params, self.check_id, status, self.witness
        )
    }
}

#[derive(Debug)]
pub struct Report {
    pub suite: String,
    pub group: String,
    pub config_echo: String,
    pub checks: Vec<CheckLine>,
    pub wall: Duration,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    /// Deterministic TSV body (no timing), one header plus one row per check.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("suite\tgroup\tparams\tcheck-id\tstatus\twitness\n");
        for c in &self.checks {
            out.push_str(&c.tsv_line());
            out.push('\n');
        }
        out
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} checks, {} failures ({} ms)",
            self.suite,
            self.checks.len(),
            self.failures(),
            self.wall.as_millis()
        )
    }
}
