#!/usr/bin/env python3
"""Regenerates the synthetic fixtures under data/fixtures/.

Every file is derived from fixed word pools and seeded RNGs, so running
this script again reproduces the committed files byte for byte.
"""

import json
import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "data" / "fixtures"

SUBJ_ADJ = [
    ("great", "رائع"), ("wonderful", "مدهش"), ("terrible", "فظيع"), ("awful", "سيئ"),
    ("beautiful", "جميل"), ("boring", "ممل"), ("brilliant", "بارع"), ("amazing", "مذهل"),
    ("horrible", "مروع"), ("lovely", "لطيف"), ("stunning", "خلاب"), ("dull", "باهت"),
    ("charming", "ساحر"), ("dreadful", "رهيب"), ("superb", "ممتاز"), ("mediocre", "متواضع"),
]
TOPICS = [
    ("film", "الفيلم"), ("story", "القصة"), ("performance", "الأداء"),
    ("music", "الموسيقى"), ("book", "الكتاب"), ("show", "العرض"),
]
AGENTS = [
    ("minister", "الوزير"), ("government", "الحكومة"), ("council", "المجلس"),
    ("committee", "اللجنة"), ("ministry", "الوزارة"), ("company", "الشركة"),
    ("parliament", "البرلمان"), ("official", "المسؤول"),
]
THINGS = [
    ("report", "التقرير"), ("budget", "الميزانية"), ("agreement", "الاتفاق"),
    ("statement", "البيان"), ("plan", "الخطة"), ("law", "القانون"),
    ("results", "النتائج"), ("figures", "الأرقام"),
]
VERBS = [
    ("announced", "أعلن"), ("published", "نشر"), ("approved", "أقر"), ("signed", "وقع"),
    ("presented", "قدم"), ("discussed", "ناقش"), ("released", "أصدر"), ("reviewed", "راجع"),
]
DAYS = [
    ("monday", "الاثنين"), ("tuesday", "الثلاثاء"), ("wednesday", "الأربعاء"),
    ("thursday", "الخميس"), ("friday", "الجمعة"), ("saturday", "السبت"), ("sunday", "الأحد"),
]

# Bilingual emotion lexicon fixture: (synset, emotion, english words, arabic words).
LEXICON = [
    ("a#0001", "anger", ["anger", "rage", "fury", "wrath"], ["غضب", "سخط", "غيظ"]),
    ("a#0002", "anger", ["outrage", "indignation", "resentment"], ["حنق", "استياء", "انزعاج"]),
    ("d#0001", "disgust", ["disgust", "repugnance", "revulsion"], ["اشمئزاز", "قرف"]),
    ("d#0002", "disgust", ["loathing", "nausea"], ["نفور", "تقزز"]),
    ("f#0001", "fear", ["fear", "terror", "dread", "fright"], ["خوف", "رعب", "فزع"]),
    ("f#0002", "fear", ["panic", "horror", "alarm"], ["ذعر", "هلع", "قلق"]),
    ("j#0001", "joy", ["joy", "happiness", "delight", "gladness"], ["فرح", "سعادة", "بهجة"]),
    ("j#0002", "joy", ["elation", "glee", "bliss"], ["سرور", "ابتهاج", "غبطة"]),
    ("s#0001", "sadness", ["sadness", "sorrow", "grief"], ["حزن", "أسى", "كآبة"]),
    ("s#0002", "sadness", ["misery", "despair", "gloom"], ["غم", "يأس", "حداد"]),
    ("u#0001", "surprise", ["surprise", "astonishment", "amazement"], ["مفاجأة", "دهشة"]),
    ("u#0002", "surprise", ["shock", "stupefaction"], ["صدمة", "ذهول", "تعجب"]),
]


def subjective(rng):
    adj1, adj2 = rng.sample(SUBJ_ADJ, 2)
    topic = rng.choice(TOPICS)
    form = rng.randrange(3)
    if form == 0:
        en = f"Honestly, the {topic[0]} was {adj1[0]} and {adj2[0]}!"
        ar = f"بصراحة، {topic[1]} كان {adj1[1]} و{adj2[1]}!"
    elif form == 1:
        en = f"I think the {topic[0]} is {adj1[0]}, really {adj2[0]}."
        ar = f"أعتقد أن {topic[1]} {adj1[1]}، حقا {adj2[1]}."
    else:
        en = f"What a {adj1[0]} {topic[0]}, so {adj2[0]}!"
        ar = f"يا له من {topic[1]} {adj1[1]}، {adj2[1]} جدا!"
    return en, ar


def objective(rng):
    agent = rng.choice(AGENTS)
    thing = rng.choice(THINGS)
    verb = rng.choice(VERBS)
    day = rng.choice(DAYS)
    if rng.randrange(2) == 0:
        en = f"The {agent[0]} {verb[0]} the {thing[0]} on {day[0]}."
        ar = f"{verb[1]} {agent[1]} {thing[1]} يوم {day[1]}."
    else:
        num = rng.randrange(2, 40)
        year = rng.randrange(2005, 2016)
        en = f"The {agent[0]} said the {thing[0]} rose by {num} percent in {year}."
        ar = f"قال {agent[1]} إن {thing[1]} ارتفعت بنسبة {num} بالمئة في عام {year}."
    return en, ar


def sentence(rng, label):
    return subjective(rng) if label == "subjective" else objective(rng)


def dump_jsonl(path, records):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for r in records:
            f.write(json.dumps(r, ensure_ascii=False, separators=(",", ":")) + "\n")


def doc(doc_id, lang, text):
    return {"id": doc_id, "lang": lang, "text": text}


def pair(pid, en, ar):
    return {"pair_id": pid, "source": doc(f"{pid}-en", "english", en),
            "target": doc(f"{pid}-ar", "arabic", ar)}


def balanced_labels(rng, n):
    labels = ["subjective"] * (n // 2) + ["objective"] * (n - n // 2)
    rng.shuffle(labels)
    return labels


def flip(label):
    return "objective" if label == "subjective" else "subjective"


def main():
    OUT.mkdir(parents=True, exist_ok=True)

    rng = random.Random(11)
    seed = []
    for i, label in enumerate(balanced_labels(rng, 120)):
        en, _ = sentence(rng, label)
        seed.append({**doc(f"seed-{i:03d}", "english", en), "label": label})
    dump_jsonl(OUT / "seed_en.jsonl", seed)

    rng = random.Random(23)
    parallel = []
    for i, label in enumerate(balanced_labels(rng, 200)):
        en, ar = sentence(rng, label)
        parallel.append(pair(f"p{i:04d}", en, ar))
    dump_jsonl(OUT / "parallel_en_ar.jsonl", parallel)

    rng = random.Random(37)
    heldout = []
    for i, label in enumerate(balanced_labels(rng, 40)):
        _, ar = sentence(rng, label)
        heldout.append({**doc(f"held-{i:03d}", "arabic", ar), "label": label})
    dump_jsonl(OUT / "heldout_ar.jsonl", heldout)

    # Comparable pairs: the target side describes the same event but carries
    # the opposite subjectivity with the given probability.
    for name, noise, n, seed_value in [("noise_05", 0.05, 1000, 101), ("noise_35", 0.35, 1000, 102),
                                       ("noise_50", 0.50, 1000, 103)]:
        rng = random.Random(seed_value)
        records = []
        for i, label in enumerate(balanced_labels(rng, n)):
            en, _ = sentence(rng, label)
            target_label = flip(label) if rng.random() < noise else label
            _, ar = sentence(rng, target_label)
            records.append(pair(f"{name}-{i:04d}", en, ar))
        dump_jsonl(OUT / f"comparable_{name}.jsonl", records)

    # Small comparable corpus with emotion words for end-to-end CLI runs.
    rng = random.Random(59)
    comparable = []
    for i, label in enumerate(balanced_labels(rng, 40)):
        en, ar_same = sentence(rng, label)
        _, ar = sentence(rng, flip(label)) if rng.random() < 0.2 else (None, ar_same)
        syn = rng.choice(LEXICON)
        en_word = rng.choice(syn[2])
        ar_syn = syn if rng.random() < 0.8 else rng.choice(LEXICON)
        ar_word = rng.choice(ar_syn[3])
        comparable.append(pair(f"c{i:03d}", f"{en} People reacted with {en_word}.",
                               f"{ar} وعبر الناس عن {ar_word}."))
    dump_jsonl(OUT / "comparable_en_ar.jsonl", comparable)

    # Already-annotated parallel pairs whose agreement cells are fixed:
    # sentiment 44/6/6/44, anger 9/2/1/88, sadness 12/2/2/84 (both/A only/B only/neither).
    rng = random.Random(71)
    cells = {
        "sentiment": [("subjective", "subjective")] * 44 + [("subjective", "objective")] * 6
        + [("objective", "subjective")] * 6 + [("objective", "objective")] * 44,
        "anger": [(1, 1)] * 9 + [(1, 0)] * 2 + [(0, 1)] * 1 + [(0, 0)] * 88,
        "sadness": [(1, 1)] * 12 + [(1, 0)] * 2 + [(0, 1)] * 2 + [(0, 0)] * 84,
    }
    for column in cells.values():
        rng.shuffle(column)
    profile = []
    for i, (p, (sl, tl), (a1, a2), (s1, s2)) in enumerate(
            zip(parallel, cells["sentiment"], cells["anger"], cells["sadness"])):
        profile.append({**p, "source_label": sl, "target_label": tl,
                        "source_emotions": [e for e, on in (("anger", a1), ("sadness", s1)) if on],
                        "target_emotions": [e for e, on in (("anger", a2), ("sadness", s2)) if on]})
    dump_jsonl(OUT / "profile_parallel_annotated.jsonl", profile)

    with open(OUT / "lexicon.tsv", "w", encoding="utf-8", newline="\n") as f:
        en_words = sum(len(e[2]) for e in LEXICON)
        ar_words = sum(len(e[3]) for e in LEXICON)
        f.write("# Synthetic bilingual emotion lexicon fixture.\n")
        f.write(f"# {len(LEXICON)} synsets, {en_words} english words, {ar_words} arabic words.\n")
        f.write("# synset_id\temotion\tlang\twords\n")
        for syn, emo, en, ar in LEXICON:
            f.write(f"{syn}\t{emo}\tenglish\t{' '.join(en)}\n")
            f.write(f"{syn}\t{emo}\tarabic\t{' '.join(ar)}\n")


if __name__ == "__main__":
    main()
