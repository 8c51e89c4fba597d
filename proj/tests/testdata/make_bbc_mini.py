#!/usr/bin/env python3
"""Regenerates the bbc_mini evaluation corpus and its parse fixtures.

The corpus mimics the directory layout of the BBC news dataset: one
directory per category, one text file per article whose first line is
the reference headline. Every sentence follows one of four fixed
templates with known dependency structure, so the matching CoNLL-U
parse for each sentence can be emitted alongside the text. Parses land
in bbc_mini_fixtures/ keyed by SHA-256 of the sentence text, the layout
the fixture-mode parser client reads.

Run from this directory:  python3 make_bbc_mini.py
"""

import hashlib
import pathlib
import shutil

ROOT = pathlib.Path(__file__).resolve().parent
CORPUS = ROOT / "bbc_mini"
FIXTURES = ROOT / "bbc_mini_fixtures"

DOCS_PER_CATEGORY = 25

SYLLABLES = [
    "Bar", "Cel", "Dor", "Fen", "Gal", "Hul", "Jor", "Kel", "Lum",
    "Mer", "Nor", "Pol", "Quin", "Ras", "Sol", "Tam", "Ul", "Ven",
    "Wex", "Yor", "Zan", "Bri", "Cro", "Del", "Far",
]

CATEGORIES = {
    "business": {
        "suffix": "corp",
        "v1": ["acquired", "outbid", "rescued", "audited"],
        "o1": ["retailer", "refinery", "startup", "exporter"],
        "place": ["Frankfurt", "Zurich", "Singapore", "Toronto"],
        "o2": ["takeover", "merger", "forecast", "windfall"],
        "v2": ["pleased", "reassured"],
        "group": ["investors", "analysts"],
        "v3": ["praised", "defended"],
        "event": ["announcement", "audit"],
    },
    "entertainment": {
        "suffix": "wood",
        "v1": ["directed", "produced", "restored", "remastered"],
        "o1": ["musical", "documentary", "trilogy", "soundtrack"],
        "place": ["Cannes", "Venice", "Hollywood", "London"],
        "o2": ["premiere", "festival", "sequel", "album"],
        "v2": ["delighted", "surprised"],
        "group": ["critics", "audiences"],
        "v3": ["celebrated", "promoted"],
        "event": ["screening", "ceremony"],
    },
    "politics": {
        "suffix": "son",
        "v1": ["proposed", "drafted", "vetoed", "amended"],
        "o1": ["budget", "treaty", "statute", "referendum"],
        "place": ["Westminster", "Brussels", "Geneva", "Edinburgh"],
        "o2": ["coalition", "manifesto", "petition", "reshuffle"],
        "v2": ["angered", "unsettled"],
        "group": ["backbenchers", "voters"],
        "v3": ["endorsed", "criticised"],
        "event": ["debate", "summit"],
    },
    "sport": {
        "suffix": "ford",
        "v1": ["thrashed", "overtook", "outpaced", "stunned"],
        "o1": ["champions", "leaders", "holders", "hosts"],
        "place": ["Cardiff", "Madrid", "Melbourne", "Turin"],
        "o2": ["transfer", "comeback", "upset", "derby"],
        "v2": ["thrilled", "silenced"],
        "group": ["fans", "pundits"],
        "v3": ["applauded", "rallied"],
        "event": ["final", "replay"],
    },
    "tech": {
        "suffix": "soft",
        "v1": ["patented", "unveiled", "benchmarked", "encrypted"],
        "o1": ["handset", "chipset", "browser", "console"],
        "place": ["Seoul", "Austin", "Helsinki", "Shenzhen"],
        "o2": ["rollout", "update", "recall", "outage"],
        "v2": ["impressed", "alarmed"],
        "group": ["developers", "gamers"],
        "v3": ["showcased", "fixed"],
        "event": ["keynote", "expo"],
    },
}


def node(nid, form, lemma, upos, head, deprel):
    return f"{nid}\t{form}\t{lemma}\t{upos}\t_\t_\t{head}\t{deprel}\t_\t_"


def tree_s1(ent, v1, o1, place):
    return [
        node(1, ent, ent, "PROPN", 2, "nsubj"),
        node(2, v1, v1, "VERB", 0, "root"),
        node(3, "the", "the", "DET", 4, "det"),
        node(4, o1, o1, "NOUN", 2, "obj"),
        node(5, "in", "in", "ADP", 6, "case"),
        node(6, place, place, "PROPN", 2, "obl"),
    ]


def tree_s2(o2, v2, group):
    return [
        node(1, "The", "the", "DET", 2, "det"),
        node(2, o2, o2, "NOUN", 3, "nsubj"),
        node(3, v2, v2, "VERB", 0, "root"),
        node(4, "many", "many", "ADJ", 5, "amod"),
        node(5, group, group, "NOUN", 3, "obj"),
    ]


def tree_s3(ent, v3, o1, event):
    return [
        node(1, ent, ent, "PROPN", 2, "nsubj"),
        node(2, v3, v3, "VERB", 0, "root"),
        node(3, "the", "the", "DET", 4, "det"),
        node(4, o1, o1, "NOUN", 2, "obj"),
        node(5, "after", "after", "ADP", 7, "case"),
        node(6, "the", "the", "DET", 7, "det"),
        node(7, event, event, "NOUN", 2, "obl"),
    ]


def tree_s4(ent):
    return [
        node(1, "Supporters", "supporter", "NOUN", 3, "nsubj"),
        node(2, "now", "now", "ADV", 3, "advmod"),
        node(3, "expect", "expect", "VERB", 0, "root"),
        node(4, "more", "more", "ADJ", 5, "amod"),
        node(5, "success", "success", "NOUN", 3, "obj"),
        node(6, "from", "from", "ADP", 7, "case"),
        node(7, ent, ent, "PROPN", 5, "nmod"),
        node(8, "this", "this", "DET", 9, "det"),
        node(9, "year", "year", "NOUN", 3, "obl"),
    ]


def write_fixture(sentence, lines):
    key = hashlib.sha256(sentence.encode()).hexdigest()
    (FIXTURES / f"{key}.conllu").write_text(
        f"# text = {sentence}\n" + "\n".join(lines) + "\n")


def reference(ent, v1, o1, place, style):
    if style == 0:
        return f"{ent} {v1} {o1}"
    if style == 1:
        return f"{ent} {v1} {o1} at {place}"
    return f"{o1} setback for {ent}"


def main():
    for path in (CORPUS, FIXTURES):
        if path.exists():
            shutil.rmtree(path)
        path.mkdir()

    for category, pools in sorted(CATEGORIES.items()):
        (CORPUS / category).mkdir()
        for i in range(DOCS_PER_CATEGORY):
            ent = SYLLABLES[i] + pools["suffix"]
            v1 = pools["v1"][i % 4]
            o1 = pools["o1"][(i // 4) % 4]
            place = pools["place"][i % 4]
            o2 = pools["o2"][i % 4]
            v2 = pools["v2"][i % 2]
            group = pools["group"][i % 2]
            v3 = pools["v3"][i % 2]
            event = pools["event"][i % 2]

            s1 = f"{ent} {v1} the {o1} in {place}"
            s2 = f"The {o2} {v2} many {group}"
            s3 = f"{ent} {v3} the {o1} after the {event}"
            s4 = f"Supporters now expect more success from {ent} this year"

            write_fixture(s1, tree_s1(ent, v1, o1, place))
            write_fixture(s2, tree_s2(o2, v2, group))
            write_fixture(s3, tree_s3(ent, v3, o1, event))
            write_fixture(s4, tree_s4(ent))

            title = reference(ent, v1, o1, place, i % 3)
            body = f"{s1}. {s2}. {s3}. {s4}."
            (CORPUS / category / f"{i + 1:03d}.txt").write_text(
                f"{title}\n\n{body}\n")

    docs = sum(1 for _ in CORPUS.glob("*/*.txt"))
    fixtures = sum(1 for _ in FIXTURES.glob("*.conllu"))
    print(f"wrote {docs} documents and {fixtures} parse fixtures")


if __name__ == "__main__":
    main()
