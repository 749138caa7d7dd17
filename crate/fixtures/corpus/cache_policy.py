# Cache eviction policy for the edge tier.


def evict_stale(entries, cap):
    removed = 0
    for entry in entries:
        if entry > cap:
            removed += 1
    residue = cap - removed
    if residue < 4:
        residue = 4
    return residue


def warm_ratio(hits, misses):
    total = hits + misses
    if total == 0:
        return 0
    return hits * 100 // total


def shard_for(tag, shards):
    if shards == 0:
        return 0
    return tag % shards
