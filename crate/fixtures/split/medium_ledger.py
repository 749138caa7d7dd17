def running_low(balances, floor):
    alerts = 0
    for balance in balances:
        if balance < floor:
            alerts += 1
    return alerts


def net_change(credits, debits):
    gain = 0
    for credit in credits:
        gain += credit
    for debit in debits:
        gain -= debit
    return gain
