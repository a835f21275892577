#include "lexintel/corpus.hpp"

#include <algorithm>
#include <string>

#include "lexintel/error.hpp"
#include "lexintel/text.hpp"

namespace lexintel {

CorpusStats& CorpusStats::operator+=(const CorpusStats& other) noexcept {
  n_sentences += other.n_sentences;
  total_words_a += other.total_words_a;
  total_words_b += other.total_words_b;
  related_words += other.related_words;
  aligned_pairs += other.aligned_pairs;
  return *this;
}

StopWords StopWords::load(const std::filesystem::path& dir, std::span<const LanguageId> languages) {
  StopWords sw;
  for (auto lang : languages) {
    const auto path = dir / (lang.str() + ".txt");
    LineReader reader(path);
    sw.words_[lang];
    std::string line;
    while (reader.next(line)) {
      if (!is_valid_utf8(line)) throw ParseError(path.string(), reader.line_number(), "invalid UTF-8");
      auto word = trim(line);
      if (word.empty() || word.front() == '#') continue;
      sw.add(lang, word);
    }
  }
  return sw;
}

void StopWords::add(LanguageId lang, std::string_view word) {
  auto normalized = strip_accents(trim(word));
  // Match the tokenizer, which maps U+2019 to an ASCII apostrophe.
  for (auto pos = normalized.find("\u2019"); pos != std::string::npos; pos = normalized.find("\u2019", pos)) {
    normalized.replace(pos, 3, "'");
  }
  if (!normalized.empty()) words_[lang].insert(std::move(normalized));
}

bool StopWords::contains(LanguageId lang, std::string_view normalized) const {
  const auto it = words_.find(lang);
  return it != words_.end() && it->second.contains(std::string(normalized));
}

std::size_t StopWords::size(LanguageId lang) const {
  const auto it = words_.find(lang);
  return it == words_.end() ? 0 : it->second.size();
}

TextProcessor::TextProcessor(LanguageId lang, const StopWords& stopwords, std::size_t cache_size)
    : stemmer_(lang), stopwords_(&stopwords), cache_size_(cache_size) {}

const TextProcessor::Entry& TextProcessor::lookup(const std::string& surface) {
  if (const auto it = cache_.find(surface); it != cache_.end()) return it->second;
  Entry entry;
  entry.normalized = strip_accents(surface);
  entry.stop = stopwords_->contains(language(), entry.normalized);
  if (!entry.stop) entry.stem = stemmer_.stem(entry.normalized);
  if (cache_.size() < cache_size_) return cache_.emplace(surface, std::move(entry)).first->second;
  scratch_ = std::move(entry);
  return scratch_;
}

std::vector<Token> TextProcessor::process(std::string_view line) {
  std::vector<Token> tokens;
  for (auto& span : tokenize_spans(line)) {
    const auto& entry = lookup(span.text);
    if (entry.stop) continue;
    tokens.push_back({std::move(span.text), entry.normalized, entry.stem, span.offset});
  }
  return tokens;
}

namespace {

std::size_t checked_line_count(const std::filesystem::path& a, const std::filesystem::path& b) {
  const auto na = count_lines(a);
  const auto nb = count_lines(b);
  if (na != nb) {
    throw Error("line count mismatch " + std::to_string(na) + " vs " + std::to_string(nb) + " (" + a.string() +
                ", " + b.string() + ")");
  }
  return na;
}

}  // namespace

ParallelReader::ParallelReader(const std::filesystem::path& path_a, const std::filesystem::path& path_b)
    : lines_(checked_line_count(path_a, path_b)), reader_a_(path_a), reader_b_(path_b) {}

bool ParallelReader::next(RawSentencePair& out) {
  const bool has_a = reader_a_.next(out.text_a);
  const bool has_b = reader_b_.next(out.text_b);
  if (has_a != has_b) {
    throw Error("line count mismatch while reading " + reader_a_.path().string() + " and " +
                reader_b_.path().string());
  }
  if (!has_a) return false;
  if (!is_valid_utf8(out.text_a)) {
    throw ParseError(reader_a_.path().string(), reader_a_.line_number(), "invalid UTF-8");
  }
  if (!is_valid_utf8(out.text_b)) {
    throw ParseError(reader_b_.path().string(), reader_b_.line_number(), "invalid UTF-8");
  }
  out.sent_id = next_id_++;
  return true;
}

std::size_t ParallelReader::read_block(std::vector<RawSentencePair>& out, std::size_t max_pairs) {
  std::size_t n = 0;
  RawSentencePair raw;
  while (n < max_pairs && next(raw)) {
    out.push_back(std::move(raw));
    ++n;
  }
  return n;
}

ParallelCorpus::ParallelCorpus(const std::filesystem::path& path_a, const std::filesystem::path& path_b,
                               LanguageId lang_a, LanguageId lang_b, const StopWords& stopwords)
    : reader_(path_a, path_b),
      proc_a_(lang_a, stopwords),
      proc_b_(lang_b, stopwords),
      lang_a_(lang_a),
      lang_b_(lang_b) {
  if (lang_a == lang_b) throw ConfigError("parallel corpus needs two different languages");
}

bool ParallelCorpus::next(SentencePair& out) {
  if (!reader_.next(raw_)) return false;
  out = make_sentence_pair(raw_.sent_id, raw_.text_a, raw_.text_b, proc_a_, proc_b_);
  return true;
}

std::vector<SentencePair> load_parallel(const std::filesystem::path& path_a, const std::filesystem::path& path_b,
                                        LanguageId lang_a, LanguageId lang_b, const StopWords& stopwords) {
  ParallelCorpus corpus(path_a, path_b, lang_a, lang_b, stopwords);
  std::vector<SentencePair> out;
  out.reserve(corpus.size());
  SentencePair sp;
  while (corpus.next(sp)) out.push_back(std::move(sp));
  return out;
}

SentencePair make_sentence_pair(std::size_t sent_id, std::string_view text_a, std::string_view text_b,
                                TextProcessor& proc_a, TextProcessor& proc_b) {
  SentencePair sp;
  sp.sent_id = sent_id;
  sp.lang_a = proc_a.language();
  sp.lang_b = proc_b.language();
  sp.tokens_a = proc_a.process(text_a);
  sp.tokens_b = proc_b.process(text_b);
  return sp;
}

namespace {

bool has_stem(const std::vector<Token>& tokens, std::string_view stem) {
  return std::any_of(tokens.begin(), tokens.end(), [&](const Token& t) { return t.stem == stem; });
}

void match_side(const SentencePair& sp, Side side, const Lexicon& lex, std::vector<MatchedOccurrence>& out) {
  const bool is_a = side == Side::a;
  const auto lang = is_a ? sp.lang_a : sp.lang_b;
  const auto partner = is_a ? sp.lang_b : sp.lang_a;
  const auto& tokens = is_a ? sp.tokens_a : sp.tokens_b;
  const auto& opposite = is_a ? sp.tokens_b : sp.tokens_a;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (const PairId id : lex.stem_lookup(lang, partner, tokens[i].stem)) {
      MatchedOccurrence occ;
      occ.sent_id = sp.sent_id;
      occ.side = side;
      occ.token_index = static_cast<std::uint32_t>(i);
      occ.pair_id = id;
      occ.aligned = has_stem(opposite, lex.stem_of(id, partner));
      out.push_back(occ);
    }
  }
}

}  // namespace

void match_occurrences(const SentencePair& sp, const Lexicon& lex, std::vector<MatchedOccurrence>& out) {
  match_side(sp, Side::a, lex, out);
  match_side(sp, Side::b, lex, out);
}

std::vector<MatchedOccurrence> match_occurrences(const SentencePair& sp, const Lexicon& lex) {
  std::vector<MatchedOccurrence> out;
  match_occurrences(sp, lex, out);
  return out;
}

CorpusStats sentence_stats(const SentencePair& sp, std::span<const MatchedOccurrence> occurrences) {
  CorpusStats stats;
  stats.n_sentences = 1;
  stats.total_words_a = sp.tokens_a.size();
  stats.total_words_b = sp.tokens_b.size();
  for (const auto& occ : occurrences) {
    if (occ.sent_id != sp.sent_id) continue;
    ++stats.related_words;
    if (occ.aligned) ++stats.aligned_pairs;
  }
  return stats;
}

CorpusStats corpus_stats(std::span<const SentencePair> sentences, std::span<const MatchedOccurrence> occurrences) {
  CorpusStats stats;
  stats.n_sentences = sentences.size();
  for (const auto& sp : sentences) {
    stats.total_words_a += sp.tokens_a.size();
    stats.total_words_b += sp.tokens_b.size();
  }
  for (const auto& occ : occurrences) {
    ++stats.related_words;
    if (occ.aligned) ++stats.aligned_pairs;
  }
  if (stats.aligned_pairs > stats.related_words) throw Error("inconsistent corpus statistics");
  return stats;
}

}  // namespace lexintel
