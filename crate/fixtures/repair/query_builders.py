# Queries assembled from request data in the three common styles:
# concatenation, percent formatting, and str.format.


def find_owner(user_input, db):
    q = "SELECT o " + user_input
    db.execute(q)


def find_span(request_range, db):
    q = "WHERE d > %s" % request_range
    db.execute(q)


def find_tagged(user_input, db):
    q = "LIKE {}".format(user_input)
    db.execute(q)
