#!/usr/bin/env python3
"""Regenerates the bundled identifier pools under crates/core/data/pools.

Each locale's seed lists are expanded into a `<locale>.pool` file, and a
`manifest.toml` records per-section entry counts, the SHA-256 of each file,
and the sections that fall back to en_US. Output is deterministic.
"""
import hashlib
import itertools
import pathlib
import random

from seeds_en import EN_US, EN_GB, EN_AU, EN_CA
from seeds_intl import ES, FR, ZH, HI, BN

LOCALES = [
    ("en_US", EN_US), ("en_GB", EN_GB), ("en_AU", EN_AU), ("en_CA", EN_CA),
    ("zh", ZH), ("es", ES), ("hi", HI), ("fr", FR), ("bn", BN),
]
LIST_TARGET = 60
OUT = pathlib.Path(__file__).resolve().parent.parent / "crates" / "core" / "data" / "pools"


def dedupe(seq):
    seen, out = set(), []
    for s in seq:
        if s not in seen:
            seen.add(s)
            out.append(s)
    return out


def sample(rng, items, n=LIST_TARGET):
    items = dedupe(items)
    if len(items) <= n:
        return items
    return sorted(rng.sample(items, n), key=items.index)


def compose(rng, formats, seed):
    out = []
    surnames = seed["surname"]
    for fmt in formats:
        for _ in range(120):
            out.append(fmt.format(
                num=rng.randint(1, 999),
                street=rng.choice(seed.get("streets", ["Main"])),
                suffix=rng.choice(seed.get("street_suffix", ["Street"])),
                city=rng.choice(seed["city"]),
                state=rng.choice(seed["state"]),
                surname=rng.choice(surnames),
                surname2=rng.choice(surnames),
                saint=rng.choice(seed["saints"]) if seed["saints"] else "",
                word=rng.choice(seed.get("company_words", [""])),
            ))
    return out


def build(code, seed):
    rng = random.Random(f"pool:{code}")
    fem, masc = dedupe(seed["feminine"]), dedupe(seed["masculine"])
    assert not set(fem) & set(masc), f"{code}: gendered sub-pools overlap"
    sep = seed.get("email_sep", ".")
    users = [f"{a}{sep}{b}" for a, b in itertools.product(seed["email_first"], seed["email_last"])]
    sections = [
        ("format.name", [seed["name_format"]]),
        ("name.feminine", fem),
        ("name.masculine", masc),
        ("surname", dedupe(seed["surname"])),
        ("hospital", sample(rng, compose(rng, seed["hospital_formats"], seed))),
        ("city", dedupe(seed["city"])),
        ("state", dedupe(seed["state"])),
        ("address", sample(rng, compose(rng, seed["address_formats"], seed))),
        ("country", dedupe(seed["countries"] or [])),
        ("company", sample(rng, compose(rng, seed["company_formats"], seed))),
        ("university", sample(rng, compose(rng, seed["university_formats"], seed))),
        ("email.user", dedupe(users)),
        ("email.domain", dedupe(seed["email_domain"])),
        ("pattern.phone_fax", seed["phone"]),
        ("pattern.date", seed["date"]),
        ("pattern.email", seed["email"]),
        ("pattern.other", seed["other"]),
    ]
    fallback = [name for name, entries in sections if not entries]
    lines = [f"# Identifier pool for {code}. Generated by tools/gen_pools.py from its seed lists."]
    counts = {}
    for name, entries in sections:
        if not entries:
            continue
        for e in entries:
            assert e.strip() == e and e and "{{" not in e and "\n" not in e, (code, name, e)
        counts[name] = len(entries)
        lines.append(f"[{name}]")
        lines.extend(entries)
    text = "\n".join(lines) + "\n"
    return text, counts, fallback


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    manifest = ['# Bundled identifier pools. Regenerate with tools/gen_pools.py.',
                'fallback_locale = "en_US"', ""]
    for code, seed in LOCALES:
        text, counts, fallback = build(code, seed)
        path = OUT / f"{code}.pool"
        path.write_text(text, encoding="utf-8")
        digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
        manifest.append(f"[locales.{code}]")
        manifest.append(f'file = "{code}.pool"')
        manifest.append(f'sha256 = "{digest}"')
        manifest.append("fallback = [" + ", ".join(f'"{f}"' for f in fallback) + "]")
        manifest.append(f"[locales.{code}.counts]")
        for name, n in counts.items():
            manifest.append(f'"{name}" = {n}')
        manifest.append("")
    (OUT / "manifest.toml").write_text("\n".join(manifest), encoding="utf-8")


if __name__ == "__main__":
    main()
