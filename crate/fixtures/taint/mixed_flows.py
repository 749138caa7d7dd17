# Longer propagation chains, exception-handler paths, and corner
# shapes: subscripts, attribute reads, double sinks, merged branches.


def store_count(user_input, db):
    n = int(user_input)
    q = "INSERT c " + n
    db.execute(q)


def store_chain(user_input, db):
    a = user_input
    b = a
    c = b
    q = "UPDATE t " + c
    db.execute(q)


def store_after_return(user_input, db):
    return "done"
    q = "DELETE " + user_input
    db.execute(q)


def store_recover(user_input, db):
    try:
        risky(user_input)
    except ValueError:
        q = "ROLLBACK " + user_input
        db.execute(q)


def store_cleanup(user_input, db):
    q = "BEGIN " + user_input
    try:
        push_work(q)
    finally:
        db.execute(q)


def store_lookup(user_input, db, table):
    row = table[user_input]
    q = "GET row " + row
    db.execute(q)


def store_field(req, db):
    name = req.owner
    q = "BY owner " + name
    db.execute(q)


def store_fanout(user_input, db, rows):
    q = "MERGE " + user_input
    db.execute(q)
    db.executemany(q, rows)


def store_half_clean(user_input, db, flag):
    if flag:
        v = sql_quote(user_input)
    else:
        v = user_input
    q = "WHERE o = " + v
    db.execute(q)


def store_appended(user_input, db):
    q = "SET x"
    q += user_input
    db.execute(q)


def tail_log(db):
    line = read_line()
    q = "LOG line " + line
    db.execute(q)


def collect_rows(untrusted_rows, db):
    q = "IN batch "
    for r in untrusted_rows:
        q += label_of(r)
    db.execute(q)
