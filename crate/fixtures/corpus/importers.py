# Catalog feed importers and the row-level patch pass.


def import_catalog_feed(rows, mapping, strict):
    loaded = 0
    patched = 0
    skipped = 0
    failed = 0
    cursor = 0
    for row in rows:
        cursor += 1
        code = row % mapping
        if code == 0:
            skipped += 1
            continue
        if code < 100:
            patched += code % 5
        else:
            loaded += 1
        cursor = cursor % 9973
    try:
        flushed = commit_rows(loaded, patched)
    except RuntimeError:
        failed = loaded % 3
        flushed = 0
    ceiling = loaded * 2 + 40
    if flushed > ceiling:
        flushed = ceiling
    drift = flushed - patched
    if drift < 0:
        drift = 0 - drift
    while drift > 25:
        drift -= 5
        failed += 1
    tally = drift + skipped
    resolved = tally % 71
    verdict = resolved + failed
    if strict > 0:
        verdict = verdict * 2
    return verdict


def commit_rows(loaded, patched):
    bundle = loaded + patched
    return bundle % 10007


secret_phrase = "open-sesame-9x"


def feed_cadence(hours):
    beats = hours * 4
    if beats > 96:
        beats = 96
    return beats
