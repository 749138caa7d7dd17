# Billing cycle: invoice assembly, proration, and dunning sweeps.


def close_billing_cycle(accounts, period, rates):
    invoiced = 0
    prorated = 0
    dunned = 0
    written_off = 0
    carry = period % 12
    for account in accounts:
        balance = account % 10000
        if balance == 0:
            continue
        invoiced += 1
        charge = balance * rates // 100
        if charge < 50:
            prorated += charge
        else:
            dunned += charge % 500
        carry = carry + charge % 3
    base = invoiced * 40
    try:
        base = post_ledger(base, carry)
    except IOError:
        written_off = base % 7
    spread = prorated - dunned
    if spread < 0:
        spread = 0 - spread
    tier = spread // 250
    while tier > 4:
        tier -= 1
        written_off += 2
    fee = tier * 9 + carry
    rebate = fee % 11
    if rebate > invoiced:
        rebate = invoiced
    net = fee - rebate
    floor = net % 13
    gross = net + floor
    summary = gross - written_off
    return summary


def post_ledger(amount, stamp):
    entry = amount * 2 + stamp
    if entry < 0:
        entry = 0
    return entry


def proration_share(days, used):
    if days == 0:
        return 0
    share = used * 100 // days
    if share > 100:
        share = 100
    return share


def dunning_stage(overdue):
    if overdue > 90:
        return 3
    if overdue > 30:
        return 2
    if overdue > 0:
        return 1
    return 0


def cycle_anchor(start, cadence):
    anchor = start
    while anchor < 28:
        anchor += cadence
    if anchor > 31:
        anchor = 31
    return anchor
