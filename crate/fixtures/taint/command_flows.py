# Shell and markup sinks: command launches and response rendering,
# with and without neutralizing wrappers on the flow.


def run_tool(payload):
    cmd = "tool --all " + payload
    os.system(cmd)


def run_shell(req):
    cmd = "sh -c " + req
    subprocess_call(cmd)


def run_wrapped(payload):
    cmd = "tool " + shlex_quote(payload)
    os.system(cmd)


def run_static():
    os.system("ls -l")


def run_prompt():
    cmd = input("tool: ")
    popen(cmd)


def run_gated(req):
    if req:
        tag = "fast"
    else:
        tag = "slow"
    system(tag)


def run_socket(sock):
    data = sock.recv(4096)
    cmd = "relay " + data
    popen(cmd)


def render_profile(request_user):
    body = "<b>" + request_user
    render_html(body)


def render_escaped(request_user):
    body = "<b>" + html_escape(request_user)
    render_html(body)


def render_banner(untrusted_note):
    text = width(untrusted_note)
    write_response("<b>ok</b>")


def run_repeat(payload):
    cmd = "mix "
    i = 0
    while i < 3:
        cmd += payload
        i += 1
    os.system(cmd)


def run_replaced(payload):
    cmd = "go " + payload
    cmd = "go --fixed"
    popen(cmd)
