//! Outcome record for a single verification instance.

/// Verdict of one check instance.
///
/// `Skip` means the instance's applicability predicate was false (e.g. a
/// congruence that only speaks about `p = 1 mod 3` asked about `p = 5`);
/// it is never an error and never a failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skip => "SKIP",
        }
    }
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one verification instance: what was compared, at which modulus,
/// and how it went. Both sides are rendered in full decimal (never truncated)
/// so a failing row carries everything needed for forensics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub p: Option<u64>,
    pub a: Option<u32>,
    pub d: Option<u64>,
    /// Free-form detail: sub-identity tags, sweep notes, recorded readings.
    pub extra: Option<String>,
    /// Reduction level label: `"p"`, `"p^2"`, `"p^3"`, or `"exact"`.
    pub modulus: String,
    pub lhs: String,
    pub rhs: String,
    pub status: CheckStatus,
    pub elapsed_ms: u64,
    /// Statement of the fact this check verifies (from the registry catalog).
    pub anchor: String,
}

impl CheckResult {
    /// A comparison outcome; status from the boolean verdict.
    pub fn compared(
        modulus: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        pass: bool,
    ) -> Self {
        CheckResult {
            id: String::new(),
            p: None,
            a: None,
            d: None,
            extra: None,
            modulus: modulus.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            status: if pass { CheckStatus::Pass } else { CheckStatus::Fail },
            elapsed_ms: 0,
            anchor: String::new(),
        }
    }

    /// An inapplicable instance.
    pub fn skipped(reason: impl Into<String>) -> Self {
        CheckResult {
            status: CheckStatus::Skip,
            extra: Some(reason.into()),
            ..CheckResult::compared("", "", "", true)
        }
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    pub fn with_p(mut self, p: u64) -> Self {
        self.p = Some(p);
        self
    }

    pub fn with_a(mut self, a: u32) -> Self {
        self.a = Some(a);
        self
    }

    pub fn with_d(mut self, d: u64) -> Self {
        self.d = Some(d);
        self
    }

    pub fn with_extra(mut self, extra: impl Into<String>) -> Self {
        self.extra = Some(extra.into());
        self
    }

    pub fn with_anchor(mut self, anchor: impl Into<String>) -> Self {
        self.anchor = anchor.into();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}
