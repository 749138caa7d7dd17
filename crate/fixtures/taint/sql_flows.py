# Query-construction flows: direct, wrapped, re-bound, branched, and
# looped paths from request data to database calls. Each function is
# small enough to enumerate its control-flow paths by hand.


def fetch_account(user_input, db):
    q = "SELECT a " + user_input
    db.execute(q)


def fetch_quoted(user_input, db):
    q = "SELECT a " + sql_quote(user_input)
    db.execute(q)


def fetch_bound(user_input, db):
    db.execute("SELECT ?", (user_input,))


def fetch_static(db):
    q = "SELECT 1"
    db.execute(q)


def fetch_branch(user_input, db, flag):
    if flag:
        q = "SELECT top"
    else:
        q = "SELECT " + user_input
    db.execute(q)


def fetch_rebuilt(user_input, db):
    q = "SELECT " + user_input
    q = "SELECT safe"
    db.execute(q)


def fetch_joined(user_input, db):
    q = "WHERE id IN "
    for part in pieces(user_input):
        q += part
    db.execute(q)


def fetch_mixed(user_input, db):
    q = sql_quote(user_input) + user_input
    db.execute(q)


def fetch_batch(user_input, db, rows):
    q = "INSERT r " + user_input
    db.executemany(q, rows)


def fetch_first(user_input, db):
    head = user_input[0]
    q = "SELECT " + head
    db.execute(q)


def fetch_pair(user_input, query_string, db):
    q = user_input + query_string
    db.execute(q)


def fetch_guarded(user_input, db):
    try:
        q = "SELECT " + user_input
        db.execute(q)
    except ValueError:
        pass
