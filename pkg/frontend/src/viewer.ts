// Viewer session: wires the socket client, the renderer, and the controls.
//
// The server is the source of truth for mode and sizes. Clicking a mode
// button or moving the ratio slider only *sends* a control message; the UI
// indicators change when (and only when) a frame carrying the new settings
// arrives. A rejected control surfaces the server's error and snaps the
// controls back to the last frame's settings.

import { CaptionClient, CaptionClientOptions, ConnectionStatus } from './client'
import { CaptionRenderer } from './renderer'
import { FrameMessage, SubtitleMode, encodeControl } from './wire'

export interface ViewerElements {
  captions: HTMLElement
  latencyIndicator: HTMLElement
  banner: HTMLElement
  errorBox: HTMLElement
  modeButtons: Record<SubtitleMode, HTMLButtonElement>
  ratioSlider: HTMLInputElement
  ratioValue: HTMLElement
}

const DEFAULT_KEYWORD_PT = 18
const DEFAULT_FUNCTION_PT = 12

export class ViewerSession {
  readonly client: CaptionClient
  private readonly renderer: CaptionRenderer
  private readonly els: ViewerElements

  private keywordSizePt = DEFAULT_KEYWORD_PT
  private functionSizePt = DEFAULT_FUNCTION_PT
  private currentMode: SubtitleMode | null = null

  constructor(url: string, els: ViewerElements, options: CaptionClientOptions = {}, ptToPx?: number) {
    this.els = els
    this.renderer = new CaptionRenderer(els.captions, els.latencyIndicator, ptToPx)
    this.client = new CaptionClient(
      url,
      {
        onFrame: (frame) => this.onFrame(frame),
        onServerError: (reason) => this.onServerError(reason),
        onStatus: (status, detail) => this.onStatus(status, detail),
      },
      options,
    )
    for (const [mode, button] of Object.entries(els.modeButtons)) {
      button.addEventListener('click', () => this.requestMode(mode as SubtitleMode))
    }
    els.ratioSlider.addEventListener('change', () => {
      this.requestRatio(Number(els.ratioSlider.value))
    })
  }

  connect(): void {
    this.client.connect()
  }

  get mode(): SubtitleMode | null {
    return this.currentMode
  }

  // -- outgoing controls ---------------------------------------------------

  requestMode(mode: SubtitleMode): void {
    this.client.send(encodeControl({ mode }))
  }

  /** Send a new function/keyword size ratio; illegal ratios never leave the client. */
  requestRatio(ratio: number): boolean {
    if (!(ratio > 0 && ratio <= 1)) {
      return false
    }
    this.client.send(encodeControl({ function_size_pt: this.keywordSizePt * ratio }))
    return true
  }

  // -- incoming ------------------------------------------------------------

  private onFrame(frame: FrameMessage): void {
    this.renderer.render(frame)
    this.els.banner.hidden = true
    this.els.errorBox.hidden = true
    this.adoptSettings(frame)
  }

  private adoptSettings(frame: FrameMessage): void {
    const keywordSizes = frame.cues.filter((c) => c.is_keyword).map((c) => c.size_pt)
    const functionSizes = frame.cues.filter((c) => !c.is_keyword).map((c) => c.size_pt)
    if (keywordSizes.length > 0) this.keywordSizePt = Math.max(...keywordSizes)
    if (functionSizes.length > 0) this.functionSizePt = Math.min(...functionSizes)
    this.currentMode = frame.mode
    for (const [mode, button] of Object.entries(this.els.modeButtons)) {
      button.classList.toggle('active', mode === frame.mode)
    }
    const ratio = this.functionSizePt / this.keywordSizePt
    this.els.ratioSlider.value = ratio.toFixed(2)
    this.els.ratioValue.textContent = ratio.toFixed(2)
  }

  private onServerError(reason: string): void {
    this.els.errorBox.textContent = `rejected: ${reason}`
    this.els.errorBox.hidden = false
    // revert controls to the last server-confirmed settings
    const ratio = this.functionSizePt / this.keywordSizePt
    this.els.ratioSlider.value = ratio.toFixed(2)
    this.els.ratioValue.textContent = ratio.toFixed(2)
  }

  private onStatus(status: ConnectionStatus, detail?: string): void {
    if (status === 'open') {
      this.els.banner.hidden = true
      return
    }
    this.els.banner.textContent =
      status === 'connecting' ? 'connecting…' : `connection lost, ${detail ?? 'retrying'}`
    this.els.banner.hidden = false
  }
}
