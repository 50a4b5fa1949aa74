//! Code parameters, record status and the code registry.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::bounds;
use crate::error::{Error, Result};

/// The triple `[[n, k, d]]` of a nondegenerate code, with `d = 2t + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeParams {
    n: usize,
    k: usize,
    d: usize,
}

impl CodeParams {
    pub fn new(n: usize, k: usize, d: usize) -> Result<Self> {
        let invalid = |message: &str| Error::Validation {
            n,
            k,
            d,
            message: message.to_string(),
        };
        if n == 0 {
            return Err(invalid("n must be positive"));
        }
        if k > n {
            return Err(invalid("k exceeds n"));
        }
        if d == 0 || d.is_multiple_of(2) {
            return Err(invalid("d must be a positive odd integer"));
        }
        if (d - 1) / 2 > n {
            return Err(invalid("correction depth exceeds n"));
        }
        Ok(Self { n, k, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Correction depth `t = (d - 1) / 2`.
    pub fn t(&self) -> usize {
        (self.d - 1) / 2
    }

    /// Encoding rate `k / n`.
    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n as f64
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]", self.n, self.k, self.d)
    }
}

/// Parses `N,K,D`, optionally wrapped in `[[...]]`.
impl FromStr for CodeParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches("[[").trim_end_matches("]]");
        let parts: Vec<&str> = body.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Domain(format!("expected N,K,D, got {s:?}")));
        }
        let mut values = [0usize; 3];
        for (slot, part) in values.iter_mut().zip(&parts) {
            *slot = part
                .parse()
                .map_err(|_| Error::Domain(format!("not a non-negative integer: {part:?}")))?;
        }
        Self::new(values[0], values[1], values[2])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodeStatus {
    /// A construction is known.
    Existing,
    /// Known to exist and saturates the quantum Hamming bound.
    Perfect,
    /// Permitted by the bounds, existence unknown.
    Hypothetical,
    /// Parameters obtained by extrapolating a hypothetical family.
    Extrapolated,
}

impl CodeStatus {
    pub const ALL: [CodeStatus; 4] = [
        CodeStatus::Existing,
        CodeStatus::Perfect,
        CodeStatus::Hypothetical,
        CodeStatus::Extrapolated,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CodeStatus::Existing => "existing",
            CodeStatus::Perfect => "perfect",
            CodeStatus::Hypothetical => "hypothetical",
            CodeStatus::Extrapolated => "extrapolated",
        }
    }

    /// Whether a construction for the code is known.
    pub fn is_known(&self) -> bool {
        matches!(self, CodeStatus::Existing | CodeStatus::Perfect)
    }
}

impl fmt::Display for CodeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CodeStatus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CodeStatus::ALL
            .into_iter()
            .find(|status| status.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown code status {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeRecord {
    pub params: CodeParams,
    pub status: CodeStatus,
    /// Free-text provenance; never contains commas or line breaks.
    pub source: String,
}

impl CodeRecord {
    /// Builds a record after checking the Hamming bound, the perfect-code
    /// equality and the source text.
    pub fn new(params: CodeParams, status: CodeStatus, source: impl Into<String>) -> Result<Self> {
        let source = source.into();
        let invalid = |message: String| Error::Validation {
            n: params.n(),
            k: params.k(),
            d: params.d(),
            message,
        };
        let (n, k, t) = (params.n(), params.k(), params.t());
        if !bounds::hamming_satisfied(n, k, t)? {
            return Err(invalid("violates the quantum Hamming bound".into()));
        }
        if status == CodeStatus::Perfect && !bounds::hamming_is_perfect(n, k, t)? {
            return Err(invalid(
                "marked perfect but does not meet the Hamming bound with equality".into(),
            ));
        }
        if source.contains(',') || source.contains('\n') {
            return Err(invalid(format!(
                "source {source:?} contains a comma or newline"
            )));
        }
        Ok(Self {
            params,
            status,
            source,
        })
    }
}

/// Filter for [`CodeRegistry::query`]. Empty `statuses` matches every status.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RegistryQuery {
    pub t: Option<usize>,
    pub statuses: Vec<CodeStatus>,
    pub max_n: Option<usize>,
}

impl RegistryQuery {
    pub fn depth(t: usize) -> Self {
        Self {
            t: Some(t),
            ..Self::default()
        }
    }

    pub fn with_status(mut self, status: CodeStatus) -> Self {
        self.statuses.push(status);
        self
    }

    pub fn with_statuses(mut self, statuses: &[CodeStatus]) -> Self {
        self.statuses.extend_from_slice(statuses);
        self
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = Some(max_n);
        self
    }

    fn matches(&self, record: &CodeRecord) -> bool {
        self.t.is_none_or(|t| record.params.t() == t)
            && (self.statuses.is_empty() || self.statuses.contains(&record.status))
            && self.max_n.is_none_or(|max_n| record.params.n() <= max_n)
    }
}

/// Immutable, validated collection of code records, unique by `(n, k, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeRegistry {
    records: Vec<CodeRecord>,
}

impl CodeRegistry {
    /// Builds a registry, rejecting duplicate triples.
    pub fn from_records(records: Vec<CodeRecord>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(records.len());
        for record in &records {
            if !seen.insert(record.params) {
                let p = record.params;
                return Err(Error::Validation {
                    n: p.n(),
                    k: p.k(),
                    d: p.d(),
                    message: "duplicate triple".into(),
                });
            }
        }
        Ok(Self { records })
    }

    pub fn records(&self) -> &[CodeRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, params: &CodeParams) -> Option<&CodeRecord> {
        self.records.iter().find(|r| &r.params == params)
    }

    /// Records matching the query, in registry order.
    pub fn query(&self, query: &RegistryQuery) -> Vec<&CodeRecord> {
        self.records.iter().filter(|r| query.matches(r)).collect()
    }

    /// Parameters of the records matching the query.
    pub fn codes(&self, query: &RegistryQuery) -> Vec<CodeParams> {
        self.query(query).into_iter().map(|r| r.params).collect()
    }

    /// Appends the records of `other`. A triple present in both registries is
    /// kept once if the statuses agree and is an error otherwise.
    pub fn merge(&self, other: &CodeRegistry) -> Result<CodeRegistry> {
        let mut records = self.records.clone();
        for record in &other.records {
            match self.get(&record.params) {
                None => records.push(record.clone()),
                Some(existing) if existing.status == record.status => {}
                Some(existing) => {
                    let p = record.params;
                    return Err(Error::Validation {
                        n: p.n(),
                        k: p.k(),
                        d: p.d(),
                        message: format!(
                            "conflicting status: {} vs {}",
                            existing.status, record.status
                        ),
                    });
                }
            }
        }
        Ok(CodeRegistry { records })
    }

    /// Renders the registry in the text table format read by [`load_registry`].
    pub fn serialize(&self) -> String {
        let mut out = String::from("# n k d status source\n");
        for r in &self.records {
            let p = r.params;
            out.push_str(&format!("{} {} {} {}", p.n(), p.k(), p.d(), r.status));
            if !r.source.is_empty() {
                out.push(' ');
                out.push_str(&r.source);
            }
            out.push('\n');
        }
        out
    }
}

/// Parses a registry table: one `n k d status source...` record per line,
/// `#` comments and blank lines ignored.
pub fn load_registry(text: &str) -> Result<CodeRegistry> {
    let mut records = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse { line, message };

        let mut rest = trimmed;
        let mut fields = [""; 4];
        for (slot, name) in fields.iter_mut().zip(["n", "k", "d", "status"]) {
            let (head, tail) = split_field(rest);
            if head.is_empty() {
                return Err(parse_err(format!("missing column `{name}`")));
            }
            *slot = head;
            rest = tail;
        }
        let mut numbers = [0usize; 3];
        for (slot, (field, name)) in numbers.iter_mut().zip(fields.iter().zip(["n", "k", "d"])) {
            *slot = field
                .parse()
                .map_err(|_| parse_err(format!("column `{name}` is not an integer: {field:?}")))?;
        }
        let status: CodeStatus = fields[3]
            .parse()
            .map_err(|e: Error| parse_err(e.to_string()))?;
        let params = CodeParams::new(numbers[0], numbers[1], numbers[2])?;
        records.push(CodeRecord::new(params, status, rest.trim())?);
    }
    CodeRegistry::from_records(records)
}

fn split_field(s: &str) -> (&str, &str) {
    let s = s.trim_start();
    match s.find(char::is_whitespace) {
        Some(i) => (&s[..i], &s[i..]),
        None => (s, ""),
    }
}

const T1: &str = "t=1 list";
const T2: &str = "t=2 list";
const T3: &str = "t=3 list";
const FIG1: &str = "inset example";

#[rustfmt::skip]
const BUILTIN: &[(usize, usize, usize, CodeStatus, &str)] = {
    use CodeStatus::*;
    &[
        (5, 1, 3, Perfect, T1),
        (8, 3, 3, Existing, T1),
        (15, 9, 3, Existing, T1),
        (16, 10, 3, Existing, T1),
        (17, 11, 3, Existing, T1),
        (21, 15, 3, Perfect, T1),
        (40, 33, 3, Existing, T1),
        (74, 66, 3, Existing, T1),
        (85, 77, 3, Perfect, T1),
        (128, 119, 3, Existing, T1),
        (256, 246, 3, Existing, T1),
        (170, 161, 3, Hypothetical, T1),

        (11, 1, 5, Existing, T2),
        (16, 4, 5, Existing, T2),
        (18, 6, 5, Existing, T2),
        (27, 13, 5, Existing, T2),
        (30, 16, 5, Existing, T2),
        (35, 20, 5, Existing, T2),
        (58, 42, 5, Existing, T2),
        (70, 54, 5, Existing, T2),
        (128, 110, 5, Existing, T2),
        (256, 231, 5, Existing, T2),
        (14, 3, 5, Hypothetical, T2),
        (16, 5, 5, Hypothetical, T2),
        (17, 6, 5, Hypothetical, T2),
        (27, 15, 5, Hypothetical, T2),
        (39, 26, 5, Hypothetical, T2),
        (83, 68, 5, Hypothetical, T2),
        (118, 102, 5, Hypothetical, T2),
        (170, 151, 5, Extrapolated, T2),
        (256, 233, 5, Extrapolated, T2),

        (17, 1, 7, Existing, T3),
        (25, 5, 7, Existing, T3),
        (35, 13, 7, Existing, T3),
        (42, 20, 7, Existing, T3),
        (64, 38, 7, Existing, T3),
        (113, 85, 7, Existing, T3),
        (128, 98, 7, Existing, T3),
        (255, 215, 7, Existing, T3),
        (20, 3, 7, Hypothetical, T3),
        (22, 5, 7, Hypothetical, T3),
        (28, 11, 7, Hypothetical, T3),
        (36, 18, 7, Hypothetical, T3),
        (59, 39, 7, Hypothetical, T3),
        (94, 72, 7, Hypothetical, T3),
        (121, 98, 7, Hypothetical, T3),
        (256, 223, 7, Extrapolated, T3),

        (64, 56, 3, Existing, FIG1),
        (64, 48, 5, Existing, FIG1),
        (64, 43, 7, Hypothetical, FIG1),
    ]
};

/// The built-in registry of listed codes.
pub fn builtin_registry() -> CodeRegistry {
    let records = BUILTIN
        .iter()
        .map(|&(n, k, d, status, source)| {
            let params = CodeParams::new(n, k, d).expect("built-in triple is well formed");
            CodeRecord::new(params, status, source).expect("built-in record is valid")
        })
        .collect();
    CodeRegistry::from_records(records).expect("built-in registry has no duplicates")
}
