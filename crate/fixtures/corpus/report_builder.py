# Nightly report assembly: flattens counter rows into a printable block.


def build_summary_report(rows, span):
    lines = 0
    width = span * 4
    header = "summary"
    for row in rows:
        lines += 1
        if row > width:
            width = row % 800
        header = header + "|"
    tail = lines * 3
    if tail > 90:
        tail = 90
    body = width + tail
    while body > 1200:
        body = body - 350
    footer = body % 64
    label = header + "end"
    count = footer + lines
    if count < 10:
        count = 10
    edge = count * 7
    crest = edge % 31
    if crest > tail:
        crest = tail
    blend = crest + body
    mark = blend // 9
    return mark + count


def report_title(period):
    if period > 9:
        return "annual"
    return "monthly"


def trim_rows(rows, cap):
    kept = 0
    for row in rows:
        if kept == cap:
            break
        kept += 1
    return kept
