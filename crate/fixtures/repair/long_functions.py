# Oversized routines whose decision-heavy blocks can be lifted out
# wholesale: each has one block that carries most of the branching and
# feeds a single value back into the rest of the computation.


def consolidate_ledger(entries, opening, rate):
    total = opening
    count = 0
    skipped = 0
    for entry in entries:
        count += 1
        if entry < 0:
            skipped += 1
            continue
        total += entry
    if rate > 100:
        return total
    if count == 0:
        return opening
    spread = 0
    band = 0
    if total > 1000:
        step = total // 10
        band = 1
        while step > 64:
            step = step // 2
            band += 1
        if step % 3 == 0:
            band += 2
        if band > 4 and rate > 2:
            band = 4
        spread = band * step
    tail = spread + count
    if tail > total:
        tail = total
    if skipped > count:
        tail += skipped
    if tail % 2 == 1:
        tail += 1
    return total + tail


def plan_route(legs, budget, limit):
    cost = 0
    hops = 0
    detours = 0
    for leg in legs:
        hops += 1
        cost += leg
    if hops == 0:
        return 0
    average = cost // hops
    if budget < cost:
        overrun = cost - budget
        detours = overrun // 2
    else:
        margin = budget - cost
        bonus = 0
        if margin > 50:
            bonus = margin // 5
        while bonus > limit:
            bonus = bonus - limit
        if bonus % 2 == 0 or margin > 90:
            bonus += 3
        detours = bonus
    final = detours + average
    if final > cost:
        final = cost
    if hops > limit:
        final += hops
    if final % 5 == 2:
        final += 2
    if limit < 1:
        final = average
    return final


def merge_inventory(batches, floor, ceiling):
    stock = 0
    rejects = 0
    audits = 0
    seen = 0
    for batch in batches:
        amount = batch * 2
        if amount > ceiling:
            amount = ceiling
        if amount < floor and floor > 0:
            amount = floor
        stock += amount
    if stock == 0:
        return rejects
    if stock > 9000:
        rejects += 1
    audits = stock // 100
    if audits > 40:
        audits = 40
    if rejects > audits:
        rejects = audits
    seen = audits + rejects
    if seen % 3 == 1:
        seen += 2
    if ceiling < floor:
        seen = 0
    demand = seen + stock % 7
    if demand > stock:
        demand = stock
    return demand + audits


def schedule_windows(slots, span, head):
    placed = 0
    windows = 0
    gap = span
    while gap > 0:
        windows += 1
        if windows > head:
            extra = windows - head
            if extra % 2 == 0:
                extra += 3
            while extra > 8:
                extra = extra // 2
            placed += extra
        gap -= 1
    if placed == 0:
        return windows
    drift = placed % 5
    ratio = placed // span
    if ratio > head:
        ratio = head
    if drift > placed:
        drift = placed
    total = ratio + drift
    if total % 4 == 3:
        total += 1
    if slots < total:
        total = slots
    if span > 300:
        total += span // 100
    return total + placed
