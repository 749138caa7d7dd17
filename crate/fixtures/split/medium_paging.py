def page_count(rows, per_page):
    if per_page < 1:
        return 0
    pages = rows // per_page
    if rows % per_page > 0:
        pages += 1
    return pages


def page_offset(page, per_page):
    if page < 1:
        return 0
    return (page - 1) * per_page
