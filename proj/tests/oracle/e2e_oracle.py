"""Reference computation for the end-to-end fixture.

Written independently of the C++ code from the documented rules, using
snowballstemmer, unicodedata, numpy and scikit-learn. Run it to regenerate
tests/fixtures/e2e/expected.json:

    python3 tests/oracle/e2e_oracle.py tests/fixtures/e2e
"""

import json
import sys
from fractions import Fraction
import unicodedata
import warnings
from pathlib import Path

import numpy as np
import snowballstemmer
from sklearn.cluster import AffinityPropagation
from sklearn.exceptions import ConvergenceWarning

STEMMERS = {"es": "spanish", "fr": "french", "it": "italian", "pt": "portuguese", "ro": "romanian"}


def strip_accents(s):
    d = unicodedata.normalize("NFD", s.lower())
    return "".join(c for c in d if not unicodedata.category(c).startswith("M"))


def is_letter(c):
    return unicodedata.category(c).startswith("L")


def is_mark(c):
    return unicodedata.category(c).startswith("M")


def tokenize(line):
    out, i, n = [], 0, len(line)
    while i < n:
        if not is_letter(line[i]):
            i += 1
            continue
        tok = ""
        while i < n:
            c = line[i]
            if is_letter(c) or (is_mark(c) and tok):
                tok += c.lower()
                i += 1
            elif c in "-'’‐" and i + 1 < n and is_letter(line[i + 1]):
                tok += {"’": "'", "‐": "-"}.get(c, c)
                i += 1
            else:
                break
        out.append(tok)
    return out


def levenshtein(a, b):
    prev = list(range(len(b) + 1))
    for i, x in enumerate(a, 1):
        cur = [i]
        for j, y in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (x != y)))
        prev = cur
    return prev[-1]


def similarity(a, b):
    return 1.0 - levenshtein(a, b) / max(len(a), len(b))


def dli(s, l):
    # Exact rational evaluation avoids cancellation in 2 - s - l near 1.
    s, l = Fraction(s), Fraction(l)
    p = s * l
    return 1.0 if p == 1 else float(p * (2 - s - l) / (1 - p))


def read_config(path):
    cfg = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            k, v = line.split("=", 1)
            cfg[k.strip()] = v.strip()
    return cfg


class Store:
    def __init__(self, path, lang):
        lines = path.read_text(encoding="utf-8").splitlines()
        self.words, self.vecs = [], []
        for line in lines[1:]:
            parts = line.split()
            if parts[0] in self.words:
                continue
            self.words.append(parts[0])
            self.vecs.append(np.array([np.float32(float(x)) for x in parts[1:]], dtype=np.float64))
        self.stem = snowballstemmer.stemmer(STEMMERS[lang]).stemWord
        self.norm = {}
        for i, w in enumerate(self.words):
            self.norm.setdefault(strip_accents(w), i)

    def resolve(self, word):
        if word in self.words:
            return "exact", self.vecs[self.words.index(word)]
        q = strip_accents(word)
        if q in self.norm:
            return "exact", self.vecs[self.norm[q]]
        keys = list(self.norm)
        same_stem = [k for k in keys if self.stem(k) == self.stem(q)]
        if same_stem:
            k = min(same_stem, key=lambda k: (levenshtein(k, q), k))
            return "fallback", self.vecs[self.norm[k]]
        if len(q) >= 3:
            near = [k for k in keys if len(k) >= 3 and k[:3] == q[:3] and levenshtein(k, q) <= 3]
            if near:
                k = min(near, key=lambda k: (levenshtein(k, q), k))
                return "fallback", self.vecs[self.norm[k]]
        return "missing", None


def clusters(vectors):
    X = np.array(vectors, dtype=np.float64)
    if len(X) == 1:
        return [X[0]]
    S = -((X[:, None, :] - X[None, :, :]) ** 2).sum(-1)
    pref = np.median(S[~np.eye(len(X), dtype=bool)])
    with warnings.catch_warnings():
        warnings.simplefilter("error", ConvergenceWarning)
        warnings.simplefilter("ignore", UserWarning)
        try:
            ap = AffinityPropagation(preference=pref, damping=0.5, max_iter=200, convergence_iter=15,
                                     affinity="precomputed", random_state=0).fit(S)
            labels = ap.labels_
        except ConvergenceWarning:
            labels = None
    if labels is None or (labels < 0).any():
        return [X.mean(axis=0)]
    return [X[labels == k].mean(axis=0) for k in np.unique(labels)]


def cosine(u, v):
    return float(np.dot(u, v) / np.sqrt(np.dot(u, u) * np.dot(v, v)))


def main(root):
    root = Path(root)
    cfg = read_config(root / "run.conf")
    langs = [l.strip() for l in cfg["languages"].split(",")]
    a, b = sorted(langs)
    stem = {l: snowballstemmer.stemmer(STEMMERS[l]).stemWord for l in langs}

    pairs, seen = [], set()
    for line in (root / cfg["lexicon"]).read_text(encoding="utf-8").splitlines()[1:]:
        la, lb, wa, wb, rel = line.split("\t")
        if la not in langs or lb not in langs:
            continue
        wa, wb = strip_accents(wa.strip()), strip_accents(wb.strip())
        key = (la, lb, wa, wb, rel) if la < lb else (lb, la, wb, wa, rel)
        if key in seen:
            continue
        seen.add(key)
        pairs.append({"lang_a": la, "lang_b": lb, "word_a": wa, "word_b": wb})
    for p in pairs:
        p["words"] = {p["lang_a"]: p["word_a"], p["lang_b"]: p["word_b"]}
        p["stems"] = {l: stem[l](w) for l, w in p["words"].items()}

    stop = {}
    for l in langs:
        words = set()
        for line in (root / cfg["stopwords"] / f"{l}.txt").read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                words.add(strip_accents(line))
        stop[l] = words

    # Channel scores per pair.
    stores = {l: Store(root / cfg[f"embeddings.{l}"], l) for l in langs}
    phon = {}
    for line in (root / cfg["phonetic"]).read_text(encoding="utf-8").splitlines()[1:]:
        l, w, ph = line.split("\t")
        phon.setdefault((l, strip_accents(w)), ph.split())
    occ = {}
    for line in (root / cfg[f"contextual.{a}-{b}"]).read_text(encoding="utf-8").splitlines():
        r = json.loads(line)
        occ.setdefault((r["lang"], strip_accents(r["word"])), []).append(r)
    centers = {}
    for key, recs in occ.items():
        recs.sort(key=lambda r: (r["sent_id"], r["token_index"]))
        vecs = [[float(np.float32(x)) for x in r["vector"]] for r in recs[:200]]
        centers[key] = clusters(vecs)

    coverage = {l: {"exact": 0, "fallback": 0, "missing": 0} for l in langs}
    resolved = {}
    for p in pairs:
        for l, w in p["words"].items():
            if (l, w) not in resolved:
                kind, v = stores[l].resolve(w)
                coverage[l][kind] += 1
                resolved[(l, w)] = v

    for p in pairs:
        la, lb, wa, wb = p["lang_a"], p["lang_b"], p["word_a"], p["word_b"]
        sim = {"orthographic": similarity(wa, wb)}
        if (la, wa) in phon and (lb, wb) in phon:
            sim["phonetic"] = similarity(phon[(la, wa)], phon[(lb, wb)])
        va, vb = resolved[(la, wa)], resolved[(lb, wb)]
        if va is not None and vb is not None and va.any() and vb.any():
            sim["static"] = min(1.0, max(0.0, cosine(va, vb)))
        if (la, wa) in centers and (lb, wb) in centers:
            ca, cb = centers[(la, wa)], centers[(lb, wb)]
            vals = [cosine(x, y) if x.any() and y.any() else 0.0 for x in ca for y in cb]
            sim["contextual"] = min(1.0, max(0.0, sum(vals) / len(vals)))
        p["sim"] = sim

    # Corpus pass.
    prefix = root / cfg[f"corpus.{a}-{b}"]
    text = {l: (prefix.parent / f"{prefix.name}.{l}.txt").read_text(encoding="utf-8").splitlines() for l in (a, b)}
    configs = [(s, m) for s in ("orthographic", "phonetic") for m in ("static", "contextual")]
    totals = {(sp, c): [0.0, 0, 0, 0] for sp in (a, b) for c in configs}
    stats = {"n_sentences": 0, "total_words_a": 0, "total_words_b": 0, "related_words": 0, "aligned_pairs": 0}
    for line_a, line_b in zip(text[a], text[b]):
        toks = {}
        for l, line in ((a, line_a), (b, line_b)):
            toks[l] = [stem[l](n) for n in (strip_accents(t) for t in tokenize(line)) if n not in stop[l]]
        stats["n_sentences"] += 1
        stats["total_words_a"] += len(toks[a])
        stats["total_words_b"] += len(toks[b])
        for speaker, listener in ((a, b), (b, a)):
            matches = []
            for s in toks[speaker]:
                ms = [p for p in pairs if {p["lang_a"], p["lang_b"]} == {a, b} and p["stems"][speaker] == s]
                for p in ms:
                    stats["related_words"] += 1
                    if p["stems"][listener] in toks[listener]:
                        stats["aligned_pairs"] += 1
                matches.append(ms)
            for c in configs:
                t = totals[(speaker, c)]
                t[1] += len(toks[speaker])
                t[3] += 1
                for ms in matches:
                    vals = [dli(p["sim"][c[1]], p["sim"][c[0]]) for p in ms if c[0] in p["sim"] and c[1] in p["sim"]]
                    if vals:
                        t[0] += max(vals)
                        t[2] += 1

    out = {"stats": stats, "coverage": coverage, "configurations": {}, "pairs": []}
    for c in configs:
        entry = {}
        for speaker, listener in ((a, b), (b, a)):
            s, n, k, ns = totals[(speaker, c)]
            entry[f"{speaker}->{listener}"] = {"score": s / n, "index_sum": s, "n_content_tokens": n,
                                               "n_scored_tokens": k, "n_sentences": ns}
        out["configurations"][f"{c[0]}_{c[1]}"] = entry
    for p in pairs:
        out["pairs"].append({"lang_a": p["lang_a"], "lang_b": p["lang_b"], "word_a": p["word_a"],
                             "word_b": p["word_b"], **{k: v for k, v in p["sim"].items()}})
    (root / "expected.json").write_text(json.dumps(out, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    print(json.dumps(out["configurations"], indent=2))
    print(json.dumps(stats))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/e2e")
