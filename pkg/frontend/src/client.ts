// WebSocket session with automatic reconnect.
//
// All network callbacks funnel into the handlers given at construction; the
// client holds no rendering state itself. The socket constructor is
// injectable so tests can run against a scripted fake server.

import { FrameMessage, ServerMessage, parseServerMessage } from './wire'

export interface SocketLike {
  onopen: ((event: unknown) => void) | null
  onmessage: ((event: { data: string }) => void) | null
  onclose: ((event: unknown) => void) | null
  send(data: string): void
  close(): void
}

export type SocketFactory = (url: string) => SocketLike

export type ConnectionStatus = 'connecting' | 'open' | 'retrying'

export interface CaptionClientHandlers {
  onFrame: (frame: FrameMessage) => void
  onServerError?: (reason: string) => void
  onStatus?: (status: ConnectionStatus, detail?: string) => void
}

export interface CaptionClientOptions {
  socketFactory?: SocketFactory
  reconnectBaseMs?: number
  reconnectMaxMs?: number
}

export class CaptionClient {
  private readonly url: string
  private readonly handlers: CaptionClientHandlers
  private readonly socketFactory: SocketFactory
  private readonly reconnectBaseMs: number
  private readonly reconnectMaxMs: number

  private socket: SocketLike | null = null
  private attempts = 0
  private stopped = false
  private retryTimer: ReturnType<typeof setTimeout> | null = null

  constructor(url: string, handlers: CaptionClientHandlers, options: CaptionClientOptions = {}) {
    this.url = url
    this.handlers = handlers
    this.socketFactory = options.socketFactory ?? ((u) => new WebSocket(u) as unknown as SocketLike)
    this.reconnectBaseMs = options.reconnectBaseMs ?? 500
    this.reconnectMaxMs = options.reconnectMaxMs ?? 8000
  }

  connect(): void {
    this.stopped = false
    this.open()
  }

  close(): void {
    this.stopped = true
    if (this.retryTimer !== null) clearTimeout(this.retryTimer)
    this.socket?.close()
    this.socket = null
  }

  send(data: string): void {
    this.socket?.send(data)
  }

  private open(): void {
    this.handlers.onStatus?.(this.attempts === 0 ? 'connecting' : 'retrying')
    const socket = this.socketFactory(this.url)
    this.socket = socket
    socket.onopen = () => {
      this.attempts = 0
      this.handlers.onStatus?.('open')
    }
    socket.onmessage = (event) => this.dispatch(event.data)
    socket.onclose = () => {
      this.socket = null
      if (!this.stopped) this.scheduleReconnect()
    }
  }

  private dispatch(data: string): void {
    let message: ServerMessage
    try {
      message = parseServerMessage(data)
    } catch {
      return
    }
    if (message.type === 'frame') this.handlers.onFrame(message)
    else this.handlers.onServerError?.(message.reason)
  }

  private scheduleReconnect(): void {
    const delay = Math.min(this.reconnectBaseMs * 2 ** this.attempts, this.reconnectMaxMs)
    this.attempts += 1
    this.handlers.onStatus?.('retrying', `reconnecting in ${delay} ms`)
    this.retryTimer = setTimeout(() => this.open(), delay)
  }
}
