// Wire protocol types, mirroring the server's newline-delimited JSON messages.

export interface WireCue {
  text: string
  size_pt: number
  visible: boolean
  is_keyword: boolean
}

export type SubtitleMode = 'normal' | 'keyword' | 'dynamik'

export interface FrameMessage {
  type: 'frame'
  seq: number
  t_ms: number
  mode: SubtitleMode
  cues: WireCue[]
  overrun: boolean
}

export interface ErrorMessage {
  type: 'error'
  reason: string
}

export interface ControlMessage {
  type: 'control'
  mode?: SubtitleMode
  keyword_size_pt?: number
  function_size_pt?: number
}

export type ServerMessage = FrameMessage | ErrorMessage

const MODES: SubtitleMode[] = ['normal', 'keyword', 'dynamik']

export function parseServerMessage(data: string): ServerMessage {
  const payload = JSON.parse(data)
  if (payload && payload.type === 'error' && typeof payload.reason === 'string') {
    return payload as ErrorMessage
  }
  if (
    payload &&
    payload.type === 'frame' &&
    typeof payload.seq === 'number' &&
    typeof payload.t_ms === 'number' &&
    MODES.includes(payload.mode) &&
    Array.isArray(payload.cues)
  ) {
    return payload as FrameMessage
  }
  throw new Error('unrecognized server message')
}

export function encodeControl(control: Omit<ControlMessage, 'type'>): string {
  const message: ControlMessage = { type: 'control', ...control }
  return JSON.stringify(message)
}
