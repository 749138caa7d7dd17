# Profile page fragments for the public site.


def render_profile_card(request_user):
    block = "<div>" + request_user
    render_html(block)


def render_banner_note(request_motto):
    piece = "<script>" + request_motto
    write_response(piece)


def static_footer():
    footer = "<b>done</b>"
    return footer


def footer_width(columns):
    width = columns * 12
    if width > 96:
        width = 96
    return width
