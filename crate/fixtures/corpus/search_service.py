# Search facade over the catalog index.


class IndexProbe:
    def __init__(self, depth):
        self.depth = depth

    def weigh_hit(self, hit):
        score = hit.boost * 2
        if hit.age > self.depth:
            score = score // 2
        score += hit.rank
        return score


def search_titles(user_input, db):
    q = "SELECT t {}".format(user_input)
    db.execute(q)
    return q


def search_tags(user_input, db):
    clean = sql_quote(user_input)
    q = "WHERE tag {}".format(clean)
    db.execute(q)
    return q


def page_size(limit):
    if limit > 50:
        return 50
    return limit
