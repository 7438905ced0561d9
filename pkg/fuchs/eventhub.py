# Copyright (C) 2020-2020 Michael Kuyper. All rights reserved.
#
# This file is subject to the terms and conditions defined in file 'LICENSE',
# which is part of this source code package.

from typing import Any, Dict, List, Optional, TextIO, Tuple

from colorama import Fore, Style

Context = Dict[str, Any]

class EventHub:
    LOG    = 0
    BUILD  = 1
    VERIFY = 2
    SEARCH = 3

    def event(self, type:int, **kwargs:Any) -> None:
        raise NotImplementedError

    def log(self, src:Any, msg:str) -> None:
        self.event(EventHub.LOG, src=src, msg=msg)

    @staticmethod
    def emit(context:Context, type:int, **kwargs:Any) -> None:
        evhub:Optional[EventHub] = context.get('evhub')
        if evhub is not None:
            evhub.event(type, **kwargs)


class CollectingEventHub(EventHub):
    def __init__(self) -> None:
        self.events:List[Tuple[int,Dict[str,Any]]] = []

    def event(self, type:int, **kwargs:Any) -> None:
        self.events.append((type, kwargs))

    def of(self, type:int) -> List[Dict[str,Any]]:
        return [kw for t, kw in self.events if t == type]


class LogWriter:
    def __init__(self, buf:TextIO) -> None:
        self.buf = buf

    def write(self, s:str, **kwargs:Any) -> None:
        try:
            self.buf.write(s)
        except ValueError:
            pass

class ColoramaStream(LogWriter):
    def write(self, s:str, style:str='', **kwargs:Any) -> None:
        super().write(f'{style}{s}{Style.RESET_ALL}')

class LoggingEventHub(EventHub):
    def __init__(self, writer:LogWriter) -> None:
        self.writer = writer

    @staticmethod
    def src2str(src:Any) -> str:
        if src is None:
            return '-'
        if isinstance(src, str):
            return src
        return type(src).__name__

    def event(self, type:int, **kwargs:Any) -> None:
        if type == EventHub.LOG:
            s = f'[{self.src2str(kwargs.get("src"))}] {kwargs["msg"]}'
            style = Fore.BLUE
        elif type == EventHub.BUILD:
            s = f'built {kwargs["kind"]} {kwargs.get("surface", "")} ({kwargs.get("count", 0)} generators)'
            style = Fore.GREEN
        elif type == EventHub.VERIFY:
            s = f'sigma {kwargs["role"]}: {kwargs["status"]}'
            if (w := kwargs.get('word')) is not None:
                s += f' -- {w}'
            style = Fore.RED if kwargs['status'] == 'unresolved' else Fore.GREEN
        elif type == EventHub.SEARCH:
            s = f'search {kwargs["what"]}: {kwargs.get("outcome", "")}'
            if (n := kwargs.get('size')) is not None:
                s += f' [{n}]'
            style = Fore.YELLOW
        else:
            s = f'event {type}: {kwargs}'
            style = ''
        self.writer.write(s + '\n', style=style)
