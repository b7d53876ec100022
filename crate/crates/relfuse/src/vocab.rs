//! Token and relation catalogs.
//!
//! A [`Vocabulary`] assigns dense ids to token surfaces and relation names and
//! keeps per-source frequency counts. Corpus construction goes through
//! [`two_round_prune`] (frequency thresholding that drops whole sentences or
//! statements containing rare tokens, in two rounds) and
//! [`retain_top_relations`] (keeps only the most frequent relation types).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::ingest::{RawStatement, Sentence};

/// Name of the single relation derived from free-text co-occurrence.
pub const COOCCURRENCE_RELATION: &str = "APPEARS_IN_SENTENCE_WITH";

/// Window used when a co-occurrence pair count is needed and the caller did
/// not specify one.
pub const DEFAULT_WINDOW: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Word,
    Concept,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Word => write!(f, "word"),
            TokenKind::Concept => write!(f, "concept"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct TokenEntry {
    pub id: usize,
    pub surface: String,
    pub kind: TokenKind,
    pub count_structured: u64,
    pub count_unstructured: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationSource {
    Structured,
    CoOccurrence,
}

impl fmt::Display for RelationSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationSource::Structured => write!(f, "structured"),
            RelationSource::CoOccurrence => write!(f, "co_occurrence"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RelationEntry {
    pub id: usize,
    pub name: String,
    pub source: RelationSource,
    pub count: u64,
}

/// Per-surface occurrence counts split by data source.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SourceCounts {
    pub structured: u64,
    pub unstructured: u64,
}

impl SourceCounts {
    /// The disjunctive count used by threshold rules: a token is frequent
    /// enough if it clears the bar in either dataset.
    pub fn max(&self) -> u64 {
        self.structured.max(self.unstructured)
    }
}

/// Token and relation frequencies over a pair of corpora.
#[derive(Debug, Clone, Default)]
pub struct FrequencyTable {
    tokens: HashMap<String, SourceCounts>,
    relations: HashMap<String, u64>,
}

impl FrequencyTable {
    pub fn token(&self, surface: &str) -> SourceCounts {
        self.tokens.get(surface).copied().unwrap_or_default()
    }

    pub fn relation(&self, name: &str) -> u64 {
        self.relations.get(name).copied().unwrap_or(0)
    }

    pub fn n_tokens(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty() && self.relations.is_empty()
    }
}

/// Counts every token occurrence per source and every relation occurrence.
///
/// Statement subjects and objects count toward the structured side; sentence
/// tokens toward the unstructured side. Empty streams yield an empty table.
pub fn count_frequencies<'a, S, T>(statements: S, sentences: T) -> FrequencyTable
where
    S: IntoIterator<Item = &'a RawStatement>,
    T: IntoIterator<Item = &'a Sentence>,
{
    let mut table = FrequencyTable::default();
    for st in statements {
        table.tokens.entry(st.subject.clone()).or_default().structured += 1;
        table.tokens.entry(st.object.clone()).or_default().structured += 1;
        *table.relations.entry(st.relation.clone()).or_default() += 1;
    }
    for sentence in sentences {
        for token in &sentence.0 {
            table.tokens.entry(token.clone()).or_default().unstructured += 1;
        }
    }
    table
}

/// Output of [`two_round_prune`]: the surviving corpora and a vocabulary
/// indexing exactly the tokens that occur in them.
#[derive(Debug, Clone)]
pub struct PruneOutcome {
    pub statements: Vec<RawStatement>,
    pub sentences: Vec<Sentence>,
    pub vocabulary: Vocabulary,
}

/// Two-round frequency thresholding.
///
/// Round one drops every sentence or statement containing a token whose count
/// is below `min_round1` in both sources. Round two recounts on the pruned
/// corpora and drops records the same way against `min_round2`. Requires
/// `min_round1 >= min_round2 >= 1`; a threshold of zero would admit tokens
/// never seen at all.
pub fn two_round_prune(
    statements: Vec<RawStatement>,
    sentences: Vec<Sentence>,
    min_round1: u64,
    min_round2: u64,
) -> Result<PruneOutcome> {
    if min_round2 < 1 {
        return Err(Error::InvalidConfig {
            field: "min_round2".into(),
            message: "thresholds must be at least 1".into(),
        });
    }
    if min_round1 < min_round2 {
        return Err(Error::InvalidConfig {
            field: "min_round1".into(),
            message: format!("must be >= min_round2 ({min_round1} < {min_round2})"),
        });
    }

    let (statements, sentences) = prune_round(statements, sentences, min_round1);
    let (statements, sentences) = prune_round(statements, sentences, min_round2);
    let vocabulary = Vocabulary::from_corpora(&statements, &sentences, DEFAULT_WINDOW);
    Ok(PruneOutcome {
        statements,
        sentences,
        vocabulary,
    })
}

fn prune_round(
    statements: Vec<RawStatement>,
    sentences: Vec<Sentence>,
    min_count: u64,
) -> (Vec<RawStatement>, Vec<Sentence>) {
    let table = count_frequencies(&statements, &sentences);
    let frequent = |surface: &str| table.token(surface).max() >= min_count;

    let statements = statements
        .into_iter()
        .filter(|st| frequent(&st.subject) && frequent(&st.object))
        .collect();
    let sentences = sentences
        .into_iter()
        .filter(|s| s.0.iter().all(|t| frequent(t)))
        .collect();
    (statements, sentences)
}

/// Keeps only statements whose relation is among the `k` most frequent.
///
/// Ties at the cutoff are broken by lexicographic relation name so builds are
/// deterministic. A corpus with fewer than `k` distinct relations is returned
/// unchanged. Returns the pruned statements and the retained relation names
/// in (count desc, name asc) order.
pub fn retain_top_relations(
    statements: Vec<RawStatement>,
    k: usize,
) -> Result<(Vec<RawStatement>, Vec<String>)> {
    if k < 1 {
        return Err(Error::InvalidConfig {
            field: "top_k_relations".into(),
            message: "must be at least 1".into(),
        });
    }

    let mut counts: BTreeMap<&str, u64> = BTreeMap::new();
    for st in &statements {
        *counts.entry(st.relation.as_str()).or_default() += 1;
    }
    let mut ranked: Vec<(&str, u64)> = counts.into_iter().collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    let retained: Vec<String> = ranked
        .into_iter()
        .take(k)
        .map(|(name, _)| name.to_string())
        .collect();

    let keep: HashMap<&str, ()> = retained.iter().map(|n| (n.as_str(), ())).collect();
    let statements = statements
        .into_iter()
        .filter(|st| keep.contains_key(st.relation.as_str()))
        .collect();
    Ok((statements, retained))
}

/// Bidirectional token and relation catalog with dense ids.
#[derive(Debug, Clone)]
pub struct Vocabulary {
    tokens: Vec<TokenEntry>,
    relations: Vec<RelationEntry>,
    token_ids: HashMap<String, usize>,
    relation_ids: HashMap<String, usize>,
}

impl Vocabulary {
    /// Indexes every token and relation occurring in the given corpora.
    ///
    /// Ids are assigned in lexicographic surface/name order, so two corpora
    /// with the same content produce identical vocabularies. A token seen in
    /// any statement is tagged [`TokenKind::Concept`]; sentence-only tokens
    /// are [`TokenKind::Word`]. When sentences are present, the
    /// [`COOCCURRENCE_RELATION`] is added with its count set to the number of
    /// ordered token pairs a `window`-limited scan of the sentences yields.
    pub fn from_corpora(
        statements: &[RawStatement],
        sentences: &[Sentence],
        window: usize,
    ) -> Vocabulary {
        let table = count_frequencies(statements, sentences);

        let mut token_rows: Vec<(&String, &SourceCounts)> = table.tokens.iter().collect();
        token_rows.sort_by(|a, b| a.0.cmp(b.0));
        let tokens: Vec<TokenEntry> = token_rows
            .into_iter()
            .enumerate()
            .map(|(id, (surface, counts))| TokenEntry {
                id,
                surface: surface.clone(),
                kind: if counts.structured > 0 {
                    TokenKind::Concept
                } else {
                    TokenKind::Word
                },
                count_structured: counts.structured,
                count_unstructured: counts.unstructured,
            })
            .collect();

        let mut relation_rows: Vec<(&String, &u64)> = table.relations.iter().collect();
        relation_rows.sort_by(|a, b| a.0.cmp(b.0));
        let mut relations: Vec<RelationEntry> = relation_rows
            .into_iter()
            .enumerate()
            .map(|(id, (name, count))| RelationEntry {
                id,
                name: name.clone(),
                source: RelationSource::Structured,
                count: *count,
            })
            .collect();

        if !sentences.is_empty() {
            let pairs: u64 = sentences
                .iter()
                .map(|s| {
                    let n = s.0.len() as u64;
                    (1..=window as u64).map(|gap| n.saturating_sub(gap)).sum::<u64>()
                })
                .sum();
            relations.push(RelationEntry {
                id: relations.len(),
                name: COOCCURRENCE_RELATION.to_string(),
                source: RelationSource::CoOccurrence,
                count: pairs,
            });
        }

        Vocabulary::from_entries(tokens, relations)
    }

    fn from_entries(tokens: Vec<TokenEntry>, relations: Vec<RelationEntry>) -> Vocabulary {
        let token_ids = tokens
            .iter()
            .map(|t| (t.surface.clone(), t.id))
            .collect();
        let relation_ids = relations
            .iter()
            .map(|r| (r.name.clone(), r.id))
            .collect();
        Vocabulary {
            tokens,
            relations,
            token_ids,
            relation_ids,
        }
    }

    pub fn n_tokens(&self) -> usize {
        self.tokens.len()
    }

    pub fn n_relations(&self) -> usize {
        self.relations.len()
    }

    pub fn tokens(&self) -> &[TokenEntry] {
        &self.tokens
    }

    pub fn relations(&self) -> &[RelationEntry] {
        &self.relations
    }

    pub fn token(&self, id: usize) -> &TokenEntry {
        &self.tokens[id]
    }

    pub fn relation(&self, id: usize) -> &RelationEntry {
        &self.relations[id]
    }

    pub fn token_id(&self, surface: &str) -> Option<usize> {
        self.token_ids.get(surface).copied()
    }

    pub fn relation_id(&self, name: &str) -> Option<usize> {
        self.relation_ids.get(name).copied()
    }

    /// Id of the co-occurrence relation, if unstructured data was ingested.
    pub fn cooccurrence_relation(&self) -> Option<usize> {
        self.relations
            .iter()
            .find(|r| r.source == RelationSource::CoOccurrence)
            .map(|r| r.id)
    }

    /// Overwrites a relation's occurrence count (used once realized triple
    /// counts are known, e.g. after windowing).
    pub fn set_relation_count(&mut self, id: usize, count: u64) {
        self.relations[id].count = count;
    }

    /// Tokens whose surface shares the longest prefix with `query`; used for
    /// suggestions on unknown-surface errors.
    pub fn suggest(&self, query: &str, limit: usize) -> Vec<String> {
        let mut scored: Vec<(usize, &str)> = self
            .tokens
            .iter()
            .map(|t| (common_prefix_len(query, &t.surface), t.surface.as_str()))
            .filter(|(len, _)| *len > 0)
            .collect();
        scored.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(b.1)));
        scored
            .into_iter()
            .take(limit)
            .map(|(_, s)| s.to_string())
            .collect()
    }

    /// Canonical serialization of the token catalog, one record per line.
    pub fn tokens_tsv(&self) -> String {
        let mut out = String::new();
        for t in &self.tokens {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                t.id, t.surface, t.kind, t.count_structured, t.count_unstructured
            ));
        }
        out
    }

    /// Canonical serialization of the relation catalog.
    pub fn relations_tsv(&self) -> String {
        let mut out = String::new();
        for r in &self.relations {
            out.push_str(&format!("{}\t{}\t{}\t{}\n", r.id, r.name, r.source, r.count));
        }
        out
    }

    /// SHA-256 over the canonical serialization; identifies the vocabulary in
    /// model files and manifests.
    pub fn hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.tokens_tsv().as_bytes());
        hasher.update(self.relations_tsv().as_bytes());
        hex_string(&hasher.finalize())
    }

    pub fn save(&self, tokens_path: &Path, relations_path: &Path) -> Result<()> {
        fs::write(tokens_path, self.tokens_tsv())?;
        fs::write(relations_path, self.relations_tsv())?;
        Ok(())
    }

    pub fn load(tokens_path: &Path, relations_path: &Path) -> Result<Vocabulary> {
        let tokens = parse_token_file(tokens_path)?;
        let relations = parse_relation_file(relations_path)?;
        Ok(Vocabulary::from_entries(tokens, relations))
    }
}

fn common_prefix_len(a: &str, b: &str) -> usize {
    a.chars()
        .zip(b.chars())
        .take_while(|(x, y)| x == y)
        .count()
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn parse_error(path: &Path, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.display().to_string(),
        line,
        message: message.into(),
    }
}

fn parse_token_file(path: &Path) -> Result<Vec<TokenEntry>> {
    let text = fs::read_to_string(path)?;
    let mut tokens = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 5 {
            return Err(parse_error(
                path,
                lineno,
                format!("expected 5 tab-separated fields, found {}", fields.len()),
            ));
        }
        let id: usize = fields[0]
            .parse()
            .map_err(|_| parse_error(path, lineno, "invalid token id"))?;
        if id != tokens.len() {
            return Err(parse_error(
                path,
                lineno,
                format!("ids must be dense: expected {}, found {id}", tokens.len()),
            ));
        }
        let kind = match fields[2] {
            "word" => TokenKind::Word,
            "concept" => TokenKind::Concept,
            other => return Err(parse_error(path, lineno, format!("unknown kind {other:?}"))),
        };
        tokens.push(TokenEntry {
            id,
            surface: fields[1].to_string(),
            kind,
            count_structured: fields[3]
                .parse()
                .map_err(|_| parse_error(path, lineno, "invalid structured count"))?,
            count_unstructured: fields[4]
                .parse()
                .map_err(|_| parse_error(path, lineno, "invalid unstructured count"))?,
        });
    }
    let mut seen = HashMap::new();
    for t in &tokens {
        if seen.insert(t.surface.clone(), t.id).is_some() {
            return Err(parse_error(
                path,
                t.id + 1,
                format!("duplicate surface {:?}", t.surface),
            ));
        }
    }
    Ok(tokens)
}

fn parse_relation_file(path: &Path) -> Result<Vec<RelationEntry>> {
    let text = fs::read_to_string(path)?;
    let mut relations = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 {
            return Err(parse_error(
                path,
                lineno,
                format!("expected 4 tab-separated fields, found {}", fields.len()),
            ));
        }
        let id: usize = fields[0]
            .parse()
            .map_err(|_| parse_error(path, lineno, "invalid relation id"))?;
        if id != relations.len() {
            return Err(parse_error(
                path,
                lineno,
                format!("ids must be dense: expected {}, found {id}", relations.len()),
            ));
        }
        let source = match fields[2] {
            "structured" => RelationSource::Structured,
            "co_occurrence" => RelationSource::CoOccurrence,
            other => {
                return Err(parse_error(path, lineno, format!("unknown source {other:?}")))
            }
        };
        relations.push(RelationEntry {
            id,
            name: fields[1].to_string(),
            source,
            count: fields[3]
                .parse()
                .map_err(|_| parse_error(path, lineno, "invalid relation count"))?,
        });
    }
    Ok(relations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sentence(tokens: &[&str]) -> Sentence {
        Sentence(tokens.iter().map(|t| t.to_string()).collect())
    }

    fn statement(s: &str, r: &str, o: &str) -> RawStatement {
        RawStatement {
            subject: s.to_string(),
            relation: r.to_string(),
            object: o.to_string(),
        }
    }

    #[test]
    fn counts_sentences_per_token() {
        let sentences = vec![sentence(&["a", "b"]), sentence(&["a", "c"])];
        let table = count_frequencies(&[], &sentences);
        assert_eq!(table.token("a").unstructured, 2);
        assert_eq!(table.token("b").unstructured, 1);
        assert_eq!(table.token("c").unstructured, 1);
        assert_eq!(table.token("a").structured, 0);
    }

    #[test]
    fn empty_streams_give_empty_table() {
        let table = count_frequencies(&[], &[]);
        assert!(table.is_empty());
        assert_eq!(table.token("anything"), SourceCounts::default());
    }

    #[test]
    fn counts_statement_copies() {
        let statements = vec![
            statement("x", "r", "y"),
            statement("x", "r", "y"),
            statement("x", "r", "y"),
        ];
        let table = count_frequencies(&statements, &[]);
        assert_eq!(table.token("x").structured, 3);
        assert_eq!(table.token("y").structured, 3);
        assert_eq!(table.relation("r"), 3);
    }

    #[test]
    fn round_one_removes_records_below_threshold() {
        // q appears 99 times; every record containing q must go.
        let mut sentences: Vec<Sentence> = (0..99).map(|_| sentence(&["q", "a"])).collect();
        for _ in 0..200 {
            sentences.push(sentence(&["a", "b"]));
        }
        let out = two_round_prune(vec![], sentences, 100, 50).unwrap();
        assert!(out.sentences.iter().all(|s| !s.0.contains(&"q".to_string())));
        assert_eq!(out.sentences.len(), 200);
        assert!(out.vocabulary.token_id("q").is_none());
    }

    #[test]
    fn prune_is_noop_when_all_tokens_frequent() {
        let sentences: Vec<Sentence> = (0..120).map(|_| sentence(&["a", "b"])).collect();
        let out = two_round_prune(vec![], sentences.clone(), 100, 50).unwrap();
        assert_eq!(out.sentences.len(), sentences.len());
        assert_eq!(out.vocabulary.n_tokens(), 2);
    }

    // Hand-walked two-round case. Corpus (sentences only):
    //   60 copies of [p, r1]   (r1 rare: 60 < 100)
    //   60 copies of [p, r2]   (r2 rare: 60 < 100)
    //   30 copies of [p, f]    (f frequent via its other sentences)
    //   120 copies of [f, g]
    // Round 1 counts: p=150, r1=60, r2=60, f=150, g=120. Sentences with r1
    // or r2 are removed, taking 120 of p's records with them. Round 2
    // recounts: p=30 < 50, so p's remaining records go; f and g stay.
    #[test]
    fn survivor_of_round_one_can_fall_in_round_two() {
        let mut sentences = Vec::new();
        for _ in 0..60 {
            sentences.push(sentence(&["p", "r1"]));
        }
        for _ in 0..60 {
            sentences.push(sentence(&["p", "r2"]));
        }
        for _ in 0..30 {
            sentences.push(sentence(&["p", "f"]));
        }
        for _ in 0..120 {
            sentences.push(sentence(&["f", "g"]));
        }
        let out = two_round_prune(vec![], sentences, 100, 50).unwrap();
        assert_eq!(out.sentences.len(), 120);
        assert!(out.vocabulary.token_id("p").is_none());
        assert!(out.vocabulary.token_id("f").is_some());
        assert!(out.vocabulary.token_id("g").is_some());
    }

    #[test]
    fn prune_rejects_zero_thresholds() {
        assert!(two_round_prune(vec![], vec![], 0, 0).is_err());
        assert!(two_round_prune(vec![], vec![], 100, 0).is_err());
        assert!(two_round_prune(vec![], vec![], 50, 100).is_err());
    }

    #[test]
    fn prune_is_idempotent() {
        let mut sentences = Vec::new();
        for _ in 0..150 {
            sentences.push(sentence(&["a", "b"]));
        }
        for _ in 0..70 {
            sentences.push(sentence(&["a", "c"]));
        }
        for _ in 0..99 {
            sentences.push(sentence(&["d", "a"]));
        }
        let statements: Vec<RawStatement> =
            (0..110).map(|_| statement("a", "REL", "b")).collect();

        let first = two_round_prune(statements, sentences, 100, 50).unwrap();
        let second = two_round_prune(
            first.statements.clone(),
            first.sentences.clone(),
            100,
            50,
        )
        .unwrap();
        assert_eq!(first.statements.len(), second.statements.len());
        assert_eq!(first.sentences.len(), second.sentences.len());
        assert_eq!(
            first.vocabulary.tokens_tsv(),
            second.vocabulary.tokens_tsv()
        );
    }

    #[test]
    fn post_prune_counts_clear_round_two_threshold() {
        let mut sentences = Vec::new();
        for _ in 0..60 {
            sentences.push(sentence(&["p", "r1"]));
        }
        for _ in 0..70 {
            sentences.push(sentence(&["p", "f"]));
        }
        for _ in 0..120 {
            sentences.push(sentence(&["f", "g"]));
        }
        let out = two_round_prune(vec![], sentences, 100, 50).unwrap();
        // Brute-force recount over the output corpora.
        let table = count_frequencies(&out.statements, &out.sentences);
        for t in out.vocabulary.tokens() {
            assert!(
                table.token(&t.surface).max() >= 50,
                "token {} survived with count {}",
                t.surface,
                table.token(&t.surface).max()
            );
        }
    }

    #[test]
    fn top_relations_by_count() {
        let mut statements = Vec::new();
        for _ in 0..10 {
            statements.push(statement("a", "r1", "b"));
        }
        for _ in 0..5 {
            statements.push(statement("a", "r2", "b"));
        }
        statements.push(statement("a", "r3", "b"));
        let (pruned, kept) = retain_top_relations(statements, 2).unwrap();
        assert_eq!(kept, vec!["r1".to_string(), "r2".to_string()]);
        assert_eq!(pruned.len(), 15);
    }

    #[test]
    fn top_relations_underfull_keeps_all() {
        let statements = vec![
            statement("a", "r1", "b"),
            statement("a", "r2", "b"),
            statement("a", "r3", "b"),
        ];
        let (pruned, kept) = retain_top_relations(statements, 20).unwrap();
        assert_eq!(kept.len(), 3);
        assert_eq!(pruned.len(), 3);
    }

    #[test]
    fn top_relations_ties_break_lexicographically() {
        // All counts equal; enumerating both orders shows only the
        // lexicographically smallest pair survives under the tie rule.
        let mut statements = Vec::new();
        for name in ["r3", "r1", "r2"] {
            for _ in 0..5 {
                statements.push(statement("a", name, "b"));
            }
        }
        let (_, kept) = retain_top_relations(statements, 2).unwrap();
        assert_eq!(kept, vec!["r1".to_string(), "r2".to_string()]);
    }

    #[test]
    fn vocabulary_ids_are_dense_and_round_trip() {
        let sentences = vec![sentence(&["b", "a", "c"])];
        let statements = vec![statement("x", "REL", "a")];
        let vocab = Vocabulary::from_corpora(&statements, &sentences, 5);
        assert_eq!(vocab.n_tokens(), 4);
        for id in 0..vocab.n_tokens() {
            assert_eq!(vocab.token(id).id, id);
            assert_eq!(vocab.token_id(&vocab.token(id).surface), Some(id));
        }
        assert_eq!(vocab.token("a".len() - 1).surface, "a"); // id 0 is "a"
        assert_eq!(vocab.token(0).kind, TokenKind::Concept); // "a" appears structured
        assert_eq!(vocab.token(1).kind, TokenKind::Word);
    }

    #[test]
    fn cooccurrence_relation_present_iff_sentences() {
        let statements = vec![statement("x", "REL", "y")];
        let without = Vocabulary::from_corpora(&statements, &[], 5);
        assert!(without.cooccurrence_relation().is_none());

        let with = Vocabulary::from_corpora(&statements, &[sentence(&["x", "y"])], 5);
        let w = with.cooccurrence_relation().unwrap();
        assert_eq!(with.relation(w).name, COOCCURRENCE_RELATION);
        assert_eq!(with.relation(w).source, RelationSource::CoOccurrence);
        assert_eq!(
            with.relations()
                .iter()
                .filter(|r| r.source == RelationSource::CoOccurrence)
                .count(),
            1
        );
    }

    #[test]
    fn save_load_round_trip_preserves_hash() {
        let dir = tempfile::tempdir().unwrap();
        let sentences = vec![sentence(&["a", "b", "a"])];
        let statements = vec![statement("c", "REL", "a")];
        let vocab = Vocabulary::from_corpora(&statements, &sentences, 5);
        let tp = dir.path().join("tokens.tsv");
        let rp = dir.path().join("relations.tsv");
        vocab.save(&tp, &rp).unwrap();
        let loaded = Vocabulary::load(&tp, &rp).unwrap();
        assert_eq!(vocab.hash(), loaded.hash());
        assert_eq!(loaded.token_id("b"), vocab.token_id("b"));
    }

    #[test]
    fn load_rejects_malformed_rows() {
        let dir = tempfile::tempdir().unwrap();
        let tp = dir.path().join("tokens.tsv");
        let rp = dir.path().join("relations.tsv");
        fs::write(&tp, "0\ta\tword\t1\n").unwrap(); // 4 fields, not 5
        fs::write(&rp, "").unwrap();
        let err = Vocabulary::load(&tp, &rp).unwrap_err();
        assert!(err.to_string().contains(":1:"), "{err}");
    }

    #[test]
    fn suggestions_rank_by_shared_prefix() {
        let sentences = vec![sentence(&["radium", "radius", "carcinoma"])];
        let vocab = Vocabulary::from_corpora(&[], &sentences, 5);
        let sug = vocab.suggest("radiu", 3);
        assert_eq!(sug, vec!["radium".to_string(), "radius".to_string()]);
    }
}
