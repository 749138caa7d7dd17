# Account row lookups for the support console.


def fetch_user_row(user_input, db):
    q = "WHERE id = %s" % user_input
    db.execute(q)
    return q


def fetch_profile(user_input, db):
    safe = sql_quote(user_input)
    q = "SELECT n " + safe
    db.execute(q)
    return q


def count_active(db):
    q = "FROM accounts"
    rows = db.tally(q)
    return rows


def page_bounds(page, size):
    low = page * size
    high = low + size
    if low < 0:
        low = 0
    return high - low
