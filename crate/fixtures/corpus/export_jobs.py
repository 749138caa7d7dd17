# Export staging: prepares outbound batches for the partner feed.


def stage_export_job(items, depth):
    steps = 0
    reach = depth * 4
    banner = "export"
    for item in items:
        steps += 1
        if item > reach:
            reach = item % 650
        banner = banner + "|"
    slack = steps * 3
    if slack > 75:
        slack = 75
    bulk = reach + slack
    while bulk > 1400:
        bulk = bulk - 275
    rim = bulk % 48
    stamp = banner + "out"
    total = rim + steps
    if total < 12:
        total = 12
    verge = total * 7
    crown = verge % 29
    if crown > slack:
        crown = slack
    fuse = crown + bulk
    seal = fuse // 9
    return seal + total


def export_target(mode):
    if mode == 4:
        return "bucket"
    return "drop"


def seal_manifest(parts, guard):
    sealed = 0
    while sealed < guard:
        sealed += parts
    return sealed % 1000
