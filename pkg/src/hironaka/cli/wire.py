"""The "hironaka-policy/1" wire protocol and the subprocess policy adapter.

Messages are UTF-8 JSON objects, one per line, over a spawned process's
standard streams:

  handshake  {"protocol": "hironaka-policy/1", "role": "host"|"agent",
              "variant": <id>}            parent -> child, echoed back
  request    {"id": n, "type": "decide", "state": <state document>,
              "legal": [...], "host_choice": [...]?}   parent -> child
  response   {"id": n, "move": <int or [ints]>}        child -> parent
  error      {"id": n, "message": <text>}              child -> parent

Every request id is answered exactly once. Any violation (bad handshake,
timeout, out-of-legality move, broken stream) aborts the episode loudly
rather than substituting a move.
"""

from __future__ import annotations

import json
import shlex
import subprocess
import threading
from typing import Optional

from ..engine import GameState, legal_agent_moves, legal_host_moves
from ..rules import VariantRules
from .statefile import state_document

PROTOCOL = "hironaka-policy/1"
DEFAULT_TIMEOUT = 10.0


class ExternalPolicyFault(Exception):
    """The external policy process broke the protocol contract."""


class _LineReader:
    """Blocking line reads with a timeout, fed by a daemon thread."""

    def __init__(self, stream):
        self._stream = stream
        self._lines: list = []
        self._cond = threading.Condition()
        self._eof = False
        t = threading.Thread(target=self._pump, daemon=True)
        t.start()

    def _pump(self):
        try:
            for line in self._stream:
                with self._cond:
                    self._lines.append(line)
                    self._cond.notify()
        except ValueError:
            pass
        with self._cond:
            self._eof = True
            self._cond.notify()

    def readline(self, timeout: float) -> Optional[str]:
        with self._cond:
            if not self._lines and not self._eof:
                self._cond.wait(timeout)
            if self._lines:
                return self._lines.pop(0)
            return None


class ExternalPolicy:
    """Subprocess-backed policy satisfying the host or agent interface.

    Spawns the command, performs the handshake, then forwards one request
    per decision and validates the move that comes back.
    """

    def __init__(
        self,
        command: str,
        role: str,
        rules: VariantRules,
        timeout: float = DEFAULT_TIMEOUT,
    ):
        if role not in ("host", "agent"):
            raise ValueError(f"role must be 'host' or 'agent', got {role!r}")
        self.role = role
        self.rules = rules
        self.timeout = timeout
        self.name = f"external:{command}"
        self._next_id = 0
        try:
            self._proc = subprocess.Popen(
                shlex.split(command),
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                text=True,
                bufsize=1,
            )
        except OSError as exc:
            raise ExternalPolicyFault(f"cannot spawn {command!r}: {exc}") from exc
        self._reader = _LineReader(self._proc.stdout)
        self._send(
            {"protocol": PROTOCOL, "role": role, "variant": rules.variant_id}
        )
        reply = self._receive()
        if reply.get("protocol") != PROTOCOL or reply.get("role") != role:
            self.close()
            raise ExternalPolicyFault(f"bad handshake: {reply!r}")

    def _send(self, message: dict) -> None:
        try:
            self._proc.stdin.write(json.dumps(message) + "\n")
            self._proc.stdin.flush()
        except (BrokenPipeError, OSError) as exc:
            raise ExternalPolicyFault(f"stream to policy broke: {exc}") from exc

    def _receive(self) -> dict:
        line = self._reader.readline(self.timeout)
        if line is None:
            raise ExternalPolicyFault("no reply from policy within timeout")
        try:
            message = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ExternalPolicyFault(f"unparseable reply {line!r}") from exc
        if not isinstance(message, dict):
            raise ExternalPolicyFault(f"reply is not an object: {message!r}")
        return message

    def _decide(self, request: dict, legal: list):
        request_id = self._next_id
        self._next_id += 1
        request["id"] = request_id
        self._send(request)
        reply = self._receive()
        if reply.get("id") != request_id:
            raise ExternalPolicyFault(
                f"reply id {reply.get('id')!r} does not match pending id {request_id}"
            )
        if "message" in reply and "move" not in reply:
            raise ExternalPolicyFault(f"policy error: {reply['message']}")
        move = reply.get("move")
        if isinstance(move, list):
            move = tuple(move)
        if move not in legal:
            raise ExternalPolicyFault(f"move {move!r} is not in the legality list")
        return move

    def decide(self, state: GameState, *args):
        """Host form: decide(state, rules, rng); agent form: decide(state, I, rules, rng)."""
        if self.role == "host":
            rules = args[0]
            legal = legal_host_moves(state, rules)
            request = {
                "type": "decide",
                "state": state_document(state, rules),
                "legal": [list(I) for I in legal],
            }
            return self._decide(request, legal)
        host_move, rules = args[0], args[1]
        legal = legal_agent_moves(state, host_move, rules)
        request = {
            "type": "decide",
            "state": state_document(state, rules),
            "legal": list(legal),
            "host_choice": list(host_move),
        }
        return self._decide(request, legal)

    def close(self) -> None:
        if self._proc.poll() is None:
            try:
                self._proc.stdin.close()
            except OSError:
                pass
            try:
                self._proc.wait(timeout=2.0)
            except subprocess.TimeoutExpired:
                self._proc.kill()
                self._proc.wait()

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.close()
